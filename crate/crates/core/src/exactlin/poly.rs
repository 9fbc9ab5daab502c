use super::scalar::Scalar;

/// A polynomial `c0 + c1·t + c2·t²` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Quadratic {
    pub c0: Scalar,
    pub c1: Scalar,
    pub c2: Scalar,
}

/// Roots of a quadratic as far as they can be expressed exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuadraticRoots {
    /// The zero polynomial.
    All,
    /// Rational roots in increasing order (possibly empty).
    Rational(Vec<Scalar>),
    /// Two real irrational roots `(-c1 ± √disc) / 2c2`.
    Irrational { discriminant: Scalar },
}

impl Quadratic {
    pub fn new(c0: Scalar, c1: Scalar, c2: Scalar) -> Self {
        Quadratic { c0, c1, c2 }
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero() && self.c2.is_zero()
    }

    pub fn degree(&self) -> Option<usize> {
        if !self.c2.is_zero() {
            Some(2)
        } else if !self.c1.is_zero() {
            Some(1)
        } else if !self.c0.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        &self.c0 + &(t * &(&self.c1 + &(t * &self.c2)))
    }

    pub fn discriminant(&self) -> Scalar {
        &self.c1 * &self.c1 - Scalar::from(4) * &self.c0 * &self.c2
    }

    pub fn roots(&self) -> QuadraticRoots {
        match self.degree() {
            None => QuadraticRoots::All,
            Some(0) => QuadraticRoots::Rational(Vec::new()),
            Some(1) => QuadraticRoots::Rational(vec![-(&self.c0 / &self.c1)]),
            _ => {
                let disc = self.discriminant();
                if disc.is_negative() {
                    return QuadraticRoots::Rational(Vec::new());
                }
                let Some(s) = disc.sqrt() else {
                    return QuadraticRoots::Irrational { discriminant: disc };
                };
                let two_a = Scalar::from(2) * &self.c2;
                let mut roots = vec![(-&self.c1 - &s) / two_a.clone(), (-&self.c1 + &s) / two_a];
                roots.sort();
                roots.dedup();
                QuadraticRoots::Rational(roots)
            }
        }
    }

    /// True when `other` is a scalar multiple of `self` (both nonzero).
    pub fn proportional(&self, other: &Quadratic) -> bool {
        let a = [&self.c0, &self.c1, &self.c2];
        let b = [&other.c0, &other.c1, &other.c2];
        (0..3).all(|i| (0..3).all(|j| a[i] * b[j] == a[j] * b[i]))
    }
}
