use crate::error::{Error, Result};

/// System dimensions and noise level for one scenario.
///
/// `n == nbar * q` and `t` must be a whole multiple of the minimal pilot
/// length `mt * nbar² * q`. A `snr_db` of `f64::INFINITY` means noise-free.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemConfig {
    pub mt: usize,
    pub mr: usize,
    pub n: usize,
    pub nbar: usize,
    pub q: usize,
    pub t: usize,
    pub snr_db: f64,
    pub seed: u64,
}

impl SystemConfig {
    /// Configuration with `n = nbar * q` and the given pilot length.
    pub fn new(mt: usize, mr: usize, nbar: usize, q: usize, t: usize, snr_db: f64) -> Result<Self> {
        let cfg = Self {
            mt,
            mr,
            n: nbar * q,
            nbar,
            q,
            t,
            snr_db,
            seed: 0,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Configuration at the minimal pilot length `T = mt * nbar² * q`.
    pub fn with_min_pilots(
        mt: usize,
        mr: usize,
        nbar: usize,
        q: usize,
        snr_db: f64,
    ) -> Result<Self> {
        Self::new(mt, mr, nbar, q, mt * nbar * nbar * q, snr_db)
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_snr_db(mut self, snr_db: f64) -> Self {
        self.snr_db = snr_db;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.mt == 0 || self.mr == 0 || self.nbar == 0 || self.q == 0 || self.t == 0 {
            return Err(Error::InvalidConfig("all dimensions must be at least 1"));
        }
        if self.n != self.nbar * self.q {
            return Err(Error::InvalidConfig("n must equal nbar * q"));
        }
        if self.t < self.t_min() {
            return Err(Error::InvalidConfig("pilot length below mt * nbar^2 * q"));
        }
        if !self.t.is_multiple_of(self.t_min()) {
            return Err(Error::InvalidConfig(
                "pilot length must be a whole multiple of mt * nbar^2 * q",
            ));
        }
        if self.snr_db.is_nan() || self.snr_db == f64::NEG_INFINITY {
            return Err(Error::InvalidConfig("snr_db must be finite or +inf"));
        }
        Ok(())
    }

    /// Minimal pilot length `mt * nbar² * q`.
    #[inline]
    pub fn t_min(&self) -> usize {
        self.mt * self.nbar * self.nbar * self.q
    }

    /// How many times the minimal design is repeated to fill `t` slots.
    #[inline]
    pub fn repetitions(&self) -> usize {
        self.t / self.t_min()
    }

    /// Noise variance per complex entry, `10^(-snr_db/10)`.
    pub fn noise_variance(&self) -> f64 {
        if self.snr_db == f64::INFINITY {
            0.0
        } else {
            10f64.powf(-self.snr_db / 10.0)
        }
    }

    /// Length of one group block `vec(H^(q) ⊗ G^(q))`, `mr * mt * nbar²`.
    #[inline]
    pub fn group_len(&self) -> usize {
        self.mr * self.mt * self.nbar * self.nbar
    }

    /// Length of the stacked combined channel.
    #[inline]
    pub fn combined_len(&self) -> usize {
        self.group_len() * self.q
    }

    /// Columns of the combined pilot matrix, `mt * nbar² * q`.
    #[inline]
    pub fn pilot_dim(&self) -> usize {
        self.mt * self.nbar * self.nbar * self.q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_sizes() {
        let cfg = SystemConfig::with_min_pilots(2, 3, 2, 4, 10.0).unwrap();
        assert_eq!(cfg.n, 8);
        assert_eq!(cfg.t, 32);
        assert_eq!(cfg.combined_len(), 2 * 3 * 4 * 4);
        assert!((cfg.noise_variance() - 0.1).abs() < 1e-15);
        assert_eq!(cfg.with_snr_db(f64::INFINITY).noise_variance(), 0.0);
    }

    #[test]
    fn rejects_bad_configs() {
        assert!(SystemConfig::new(0, 1, 1, 1, 1, 0.0).is_err());
        assert!(SystemConfig::new(1, 1, 2, 2, 4, 0.0).is_err());
        assert!(SystemConfig::new(1, 1, 2, 2, 12, 0.0).is_err());
        assert!(SystemConfig::new(1, 1, 2, 2, 16, 0.0).is_ok());
        assert!(SystemConfig::new(1, 1, 1, 1, 1, f64::NAN).is_err());
        let mut cfg = SystemConfig::new(1, 1, 2, 2, 8, 0.0).unwrap();
        cfg.n = 5;
        assert!(cfg.validate().is_err());
    }
}
