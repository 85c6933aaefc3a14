//! Exponent vectors over the naturals and their extension by an infinite
//! entry.
//!
//! [`Exponent`] is a point of `ℕⁿ` and stands for the monomial with those
//! exponents. [`Face`] is a point of `ℕ∞ⁿ` where single coordinates may be
//! infinite; faces are the elements of a multicomplex. Both carry the
//! componentwise partial order; the derived `Ord` is lexicographic (with
//! infinity greatest) and is used only for canonical sorting.

use std::fmt;

/// A natural number extended by the distinguished value infinity.
///
/// The total order places every finite value below `Inf`, and addition
/// absorbs into `Inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtExp {
    Fin(u32),
    Inf,
}

impl ExtExp {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtExp::Fin(_))
    }

    /// The finite value, if any.
    pub fn finite(self) -> Option<u32> {
        match self {
            ExtExp::Fin(v) => Some(v),
            ExtExp::Inf => None,
        }
    }

}

/// Addition absorbing into infinity.
impl std::ops::Add for ExtExp {
    type Output = ExtExp;

    fn add(self, rhs: ExtExp) -> ExtExp {
        match (self, rhs) {
            (ExtExp::Fin(a), ExtExp::Fin(b)) => ExtExp::Fin(a + b),
            _ => ExtExp::Inf,
        }
    }
}

impl From<u32> for ExtExp {
    fn from(v: u32) -> Self {
        ExtExp::Fin(v)
    }
}

impl fmt::Display for ExtExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtExp::Fin(v) => write!(f, "{v}"),
            ExtExp::Inf => write!(f, "inf"),
        }
    }
}

/// An exponent vector in `ℕⁿ`, i.e. the monomial `x^a`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent {
    coords: Vec<u32>,
}

impl Exponent {
    pub fn new(coords: Vec<u32>) -> Self {
        Exponent { coords }
    }

    /// The exponent vector of the monomial `1`.
    pub fn zero(n: usize) -> Self {
        Exponent { coords: vec![0; n] }
    }

    pub fn unit(n: usize, k: usize, e: u32) -> Self {
        let mut coords = vec![0; n];
        coords[k] = e;
        Exponent { coords }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn coord(&self, k: usize) -> u32 {
        self.coords[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Total degree.
    pub fn degree(&self) -> u64 {
        self.coords.iter().map(|&c| u64::from(c)).sum()
    }

    /// Componentwise `≤`, i.e. whether `x^self` divides `x^other`.
    pub fn divides(&self, other: &Exponent) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.coords.iter().zip(&other.coords).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum, the exponent of the lcm of the two monomials.
    pub fn join(&self, other: &Exponent) -> Exponent {
        assert_eq!(self.len(), other.len(), "ambient dimension mismatch");
        Exponent::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Componentwise minimum, the exponent of the gcd of the two monomials.
    pub fn meet(&self, other: &Exponent) -> Exponent {
        assert_eq!(self.len(), other.len(), "ambient dimension mismatch");
        Exponent::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// Componentwise difference clamped at zero; the exponent of
    /// `x^self / gcd(x^self, x^other)`.
    pub fn saturating_sub(&self, other: &Exponent) -> Exponent {
        assert_eq!(self.len(), other.len(), "ambient dimension mismatch");
        Exponent::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// Coordinates with a nonzero entry.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(k, _)| k)
    }

    pub fn with_coord(&self, k: usize, value: u32) -> Exponent {
        let mut coords = self.coords.clone();
        coords[k] = value;
        Exponent { coords }
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(coords: Vec<u32>) -> Self {
        Exponent { coords }
    }
}

/// Componentwise addition; the exponent of the product of the monomials.
impl std::ops::Add for &Exponent {
    type Output = Exponent;

    fn add(self, other: &Exponent) -> Exponent {
        assert_eq!(self.len(), other.len(), "ambient dimension mismatch");
        Exponent::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl fmt::Display for Exponent {
    /// Renders the monomial, e.g. `x1^2*x3`; the zero vector renders as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "1");
        }
        let mut first = true;
        for (k, &e) in self.coords.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", k + 1)?;
            } else {
                write!(f, "x{}^{}", k + 1, e)?;
            }
        }
        Ok(())
    }
}

/// A point of `ℕ∞ⁿ`: an exponent vector whose entries may be infinite.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face {
    coords: Vec<ExtExp>,
}

impl Face {
    pub fn new(coords: Vec<ExtExp>) -> Self {
        Face { coords }
    }

    /// The face with every coordinate infinite.
    pub fn all_infinite(n: usize) -> Self {
        Face {
            coords: vec![ExtExp::Inf; n],
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[ExtExp] {
        &self.coords
    }

    pub fn coord(&self, k: usize) -> ExtExp {
        self.coords[k]
    }

    pub fn is_finite(&self) -> bool {
        self.coords.iter().all(|c| c.is_finite())
    }

    /// Projects back to an exponent vector when no coordinate is infinite.
    pub fn to_exponent(&self) -> Option<Exponent> {
        self.coords
            .iter()
            .map(|c| c.finite())
            .collect::<Option<Vec<_>>>()
            .map(Exponent::new)
    }

    /// Componentwise `≤` with infinity on top.
    pub fn leq(&self, other: &Face) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.coords.iter().zip(&other.coords).all(|(a, b)| a <= b)
    }

    /// Whether the finite point `b` lies under this face.
    pub fn geq_exponent(&self, b: &Exponent) -> bool {
        debug_assert_eq!(self.len(), b.len());
        self.coords
            .iter()
            .zip(b.coords())
            .all(|(a, &v)| ExtExp::Fin(v) <= *a)
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &Face) -> Face {
        assert_eq!(self.len(), other.len(), "ambient dimension mismatch");
        Face::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }
}

impl From<Exponent> for Face {
    fn from(e: Exponent) -> Self {
        Face {
            coords: e.coords().iter().map(|&c| ExtExp::Fin(c)).collect(),
        }
    }
}

impl From<&Exponent> for Face {
    fn from(e: &Exponent) -> Self {
        Face {
            coords: e.coords().iter().map(|&c| ExtExp::Fin(c)).collect(),
        }
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Visits every vector `v` with `0 <= v[k] <= bounds[k]`.
pub(crate) fn for_each_in_box(bounds: &[u32], mut f: impl FnMut(&[u32])) {
    let n = bounds.len();
    let mut v = vec![0u32; n];
    loop {
        f(&v);
        let mut k = 0;
        loop {
            if k == n {
                return;
            }
            if v[k] < bounds[k] {
                v[k] += 1;
                break;
            }
            v[k] = 0;
            k += 1;
        }
    }
}
