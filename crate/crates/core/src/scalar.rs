use std::fmt::{Debug, Display, LowerExp};
use std::sync::OnceLock;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

use crate::quadrature::NodeTable;

/// Floating-point scalar the numeric core is generic over.
///
/// Each implementor owns a lazily built, read-only tanh-sinh node table.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` literal into `Self`, rounding if needed.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    /// Widens to `f64` for diagnostics.
    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn node_table() -> &'static NodeTable<Self>;
}

impl Scalar for f64 {
    fn node_table() -> &'static NodeTable<f64> {
        static TABLE: OnceLock<NodeTable<f64>> = OnceLock::new();
        TABLE.get_or_init(NodeTable::build)
    }
}

impl Scalar for f32 {
    fn node_table() -> &'static NodeTable<f32> {
        static TABLE: OnceLock<NodeTable<f32>> = OnceLock::new();
        TABLE.get_or_init(NodeTable::build)
    }
}
