//! Linear structural equation models with Student-t noise.

use alloc::vec::Vec;

use rand::Rng;
use rand_distr::{Distribution, StudentT};

use crate::copula::RngStream;
use crate::sample::PairedSample;
use crate::{Error, Result};

/// Causal configuration between the two variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemDirection {
    /// No causal link (`beta` is ignored).
    Independent,
    /// The first variable drives the second.
    XToY,
    /// The second variable drives the first.
    YToX,
}

/// A linear SEM `cause = noise`, `effect = beta * cause + noise`, with all
/// noise terms (and the optional confounder) i.i.d. Student-t.
///
/// When `confounded` is set, an independent t-distributed confounder scaled
/// by `confounder_loading` is added to both variables, which attenuates the
/// directional asymmetry without removing it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SemConfig {
    pub beta: f64,
    pub noise_dof: f64,
    pub direction: SemDirection,
    pub confounded: bool,
    pub confounder_loading: f64,
}

impl SemConfig {
    pub fn new(direction: SemDirection, beta: f64) -> Result<Self> {
        Self {
            beta,
            noise_dof: 3.0,
            direction,
            confounded: false,
            confounder_loading: 0.3,
        }
        .validated()
    }

    pub fn with_noise_dof(mut self, dof: f64) -> Result<Self> {
        self.noise_dof = dof;
        self.validated()
    }

    pub fn with_confounder(mut self, loading: f64) -> Result<Self> {
        self.confounded = true;
        self.confounder_loading = loading;
        self.validated()
    }

    fn validated(self) -> Result<Self> {
        if !(self.noise_dof > 0.0 && self.noise_dof.is_finite()) {
            return Err(Error::invalid("noise_dof", "must be positive and finite"));
        }
        if !self.beta.is_finite() {
            return Err(Error::invalid("beta", "must be finite"));
        }
        if !self.confounder_loading.is_finite() {
            return Err(Error::invalid("confounder_loading", "must be finite"));
        }
        Ok(self)
    }
}

/// Draws `n` observations of `(X, Y)` under `config`.
pub fn sample_sem(config: &SemConfig, n: usize, stream: &RngStream) -> Result<PairedSample> {
    if n < 2 {
        return Err(Error::InsufficientData { needed: 2, got: n });
    }
    let t = StudentT::new(config.noise_dof)
        .map_err(|_| Error::invalid("noise_dof", "rejected by the Student-t sampler"))?;
    let beta = match config.direction {
        SemDirection::Independent => 0.0,
        _ => config.beta,
    };
    let mut rng = stream.rng();
    let mut x = Vec::with_capacity(n);
    let mut y = Vec::with_capacity(n);
    for _ in 0..n {
        let e1 = draw_t(&t, &mut rng);
        let e2 = draw_t(&t, &mut rng);
        let c = if config.confounded {
            config.confounder_loading * draw_t(&t, &mut rng)
        } else {
            0.0
        };
        let (xi, yi) = match config.direction {
            SemDirection::Independent => (e1 + c, e2 + c),
            SemDirection::XToY => {
                let xi = e1 + c;
                (xi, beta * xi + e2 + c)
            }
            SemDirection::YToX => {
                let yi = e2 + c;
                (beta * yi + e1 + c, yi)
            }
        };
        x.push(xi);
        y.push(yi);
    }
    Ok(PairedSample::from_generated(x, y))
}

/// Student-t draw guarded against the (measure-zero) non-finite corner of the
/// ratio construction.
fn draw_t<R: Rng + ?Sized>(t: &StudentT<f64>, rng: &mut R) -> f64 {
    loop {
        let v = t.sample(rng);
        if v.is_finite() {
            return v;
        }
    }
}
