//! The physical scenario: dimensions, random channels, the orthogonal
//! training design and the received training signal.

mod channels;
mod config;
mod signal;
mod training;

pub use channels::{
    combined_channel, combined_from_factors, complex_gaussian, generate_channels, ChannelPair,
    CombinedChannel,
};
pub use config::SystemConfig;
pub use signal::{stacked_rx, synthesize_rx};
pub use training::{build_training, TrainingDesign};
