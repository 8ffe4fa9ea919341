use std::borrow::Cow;

use crate::Scalar;

/// Levels kept in the shared table; deeper levels are generated on demand.
const CACHED_LEVELS: usize = 12;

/// One abscissa of the tanh-sinh rule on `[-1, 1]`, stored for `t >= 0`.
///
/// With `s = (pi/2) sinh t` the abscissa is `tanh s`; `complement` holds
/// `1 - tanh s` so that points near an endpoint keep full relative accuracy.
#[derive(Debug, Clone, Copy)]
pub struct Node<T> {
    pub t: T,
    pub weight: T,
    pub complement: T,
}

/// Nested tanh-sinh abscissas: level 0 has step 1, level `k` adds the odd
/// multiples of `2^-k`.
#[derive(Debug)]
pub struct NodeTable<T> {
    t_max: T,
    levels: Vec<Vec<Node<T>>>,
}

impl<T: Scalar> NodeTable<T> {
    pub(crate) fn build() -> Self {
        // stop where 1 - tanh s is about min_positive^0.9
        let s_max = -T::min_positive_value().ln() * T::lit(0.45);
        let t_max = (s_max / T::FRAC_PI_2()).asinh();
        let levels = (0..CACHED_LEVELS).map(|k| generate(k, t_max)).collect();
        NodeTable { t_max, levels }
    }

    /// Largest `t` in the rule.
    pub fn t_max(&self) -> T {
        self.t_max
    }

    pub fn level(&self, k: usize) -> Cow<'_, [Node<T>]> {
        match self.levels.get(k) {
            Some(nodes) => Cow::Borrowed(nodes),
            None => Cow::Owned(generate(k, self.t_max)),
        }
    }
}

fn node<T: Scalar>(t: T) -> Node<T> {
    let s = T::FRAC_PI_2() * t.sinh();
    // 1 - tanh s = e^-s / cosh s, and sech^2 s = c (2 - c)
    let complement = (-s).exp() / s.cosh();
    let weight = T::FRAC_PI_2() * t.cosh() * complement * (T::lit(2.0) - complement);
    Node {
        t,
        weight,
        complement,
    }
}

fn generate<T: Scalar>(level: usize, t_max: T) -> Vec<Node<T>> {
    let h = T::lit(0.5).powi(level as i32);
    let (start, stride) = if level == 0 { (0u64, 1u64) } else { (1, 2) };
    let mut out = Vec::new();
    let mut j = start;
    loop {
        let t = T::from_u64(j).unwrap() * h;
        if t > t_max {
            break;
        }
        let n = node(t);
        if n.complement <= T::zero() || n.weight <= T::zero() {
            break;
        }
        out.push(n);
        j += stride;
    }
    out
}
