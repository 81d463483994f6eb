use crate::error::{Error, Result};
use crate::transform::TransformPair;

/// Where the partition points are spaced evenly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Placement {
    /// Equal-width strips on the transformed axis `[0, t^α/Γ(α+1)]`.
    #[default]
    UniformTransformed,
    /// Equal steps in τ on `[0, t]`; for comparison only.
    UniformTau,
}

/// A partition `x¹` of the transformed axis together with its companion
/// points `x² = h(x¹)` on `[0, t]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    transformed: Vec<f64>,
    companion: Vec<f64>,
}

impl Partition {
    pub fn new(pair: &TransformPair, n: usize, placement: Placement) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("partition needs n >= 1".into()));
        }
        let width = pair.width();
        let t = pair.t();
        let (mut transformed, mut companion): (Vec<f64>, Vec<f64>) = match placement {
            Placement::UniformTransformed => (0..=n)
                .map(|i| {
                    let x = width * i as f64 / n as f64;
                    (x, pair.h(x.min(width)).expect("x within [0, width]"))
                })
                .unzip(),
            Placement::UniformTau => (0..=n)
                .map(|i| {
                    let tau = (t * i as f64 / n as f64).min(t);
                    (pair.g_unchecked(tau), tau)
                })
                .unzip(),
        };
        transformed[0] = 0.0;
        companion[0] = 0.0;
        transformed[n] = width;
        companion[n] = t;
        Ok(Self {
            transformed,
            companion,
        })
    }

    pub fn len(&self) -> usize {
        self.transformed.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `x¹_0 .. x¹_n`.
    pub fn transformed(&self) -> &[f64] {
        &self.transformed
    }

    /// `x²_0 .. x²_n`.
    pub fn companion(&self) -> &[f64] {
        &self.companion
    }

    /// Checks ordering and endpoint pinning. The transformed points must be
    /// strictly increasing; companion points may coincide where `h` is flatter
    /// than the f64 spacing near `t` (small α, large n).
    pub fn validate(&self, pair: &TransformPair) -> Result<()> {
        let strictly = self.transformed.windows(2).all(|w| w[0] < w[1]);
        let weakly = self.companion.windows(2).all(|w| w[0] <= w[1]);
        let n = self.len();
        let pinned = self.transformed[0] == 0.0
            && self.transformed[n] == pair.width()
            && self.companion[0] == 0.0
            && self.companion[n] == pair.t();
        if strictly && weakly && pinned {
            Ok(())
        } else {
            Err(Error::InvalidArgument("malformed partition".into()))
        }
    }
}
