use core::cmp::Ordering;
use core::fmt;
use core::ops::Add;

/// Raw value used for "unreachable". Finite values stay well below
/// [`Dist::FINITE_LIMIT`], so `INF + x` for any finite `x` stays above
/// [`Dist::INF_FLOOR`] and `INF + INF` does not overflow.
pub(crate) const INF_RAW: i64 = 1 << 61;

/// A path length over `Z ∪ {∞}`.
///
/// Addition saturates at infinity: `∞ + x = ∞` for every `x`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dist(i64);

impl Dist {
    pub const INF: Dist = Dist(INF_RAW);
    pub const ZERO: Dist = Dist(0);

    /// Largest magnitude a finite distance may have.
    pub const FINITE_LIMIT: i64 = 1 << 59;

    /// Raw sums at or above this value denote infinity.
    pub(crate) const INF_FLOOR: i64 = 1 << 60;

    #[inline]
    pub fn finite(value: i64) -> Dist {
        debug_assert!(
            value.abs() <= Self::FINITE_LIMIT,
            "finite distance {value} exceeds headroom"
        );
        Dist(value)
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.0 != INF_RAW
    }

    #[inline]
    pub fn is_inf(self) -> bool {
        self.0 == INF_RAW
    }

    #[inline]
    pub fn value(self) -> Option<i64> {
        self.is_finite().then_some(self.0)
    }

    /// Finite value; panics on infinity.
    #[inline]
    pub fn unwrap(self) -> i64 {
        assert!(self.is_finite(), "unwrap on an infinite distance");
        self.0
    }

    #[inline]
    pub(crate) fn raw(self) -> i64 {
        self.0
    }

    /// Maps a raw kernel value back into a distance, folding every value at
    /// or above [`Self::INF_FLOOR`] into infinity.
    #[inline]
    pub(crate) fn from_raw(raw: i64) -> Dist {
        if raw >= Self::INF_FLOOR {
            Dist::INF
        } else {
            Dist(raw)
        }
    }
}

impl From<i64> for Dist {
    fn from(value: i64) -> Self {
        Dist::finite(value)
    }
}

impl Add for Dist {
    type Output = Dist;

    #[inline]
    fn add(self, rhs: Dist) -> Dist {
        if self.is_inf() || rhs.is_inf() {
            Dist::INF
        } else {
            Dist::finite(self.0 + rhs.0)
        }
    }
}

impl Add<i64> for Dist {
    type Output = Dist;

    #[inline]
    fn add(self, rhs: i64) -> Dist {
        self + Dist::finite(rhs)
    }
}

impl PartialOrd for Dist {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dist {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Debug for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("inf"),
        }
    }
}
