use super::complex::ApComplex;
use super::real::ApReal;
use num_rational::BigRational;
use num_traits::Zero;

/// The field operations the recurrences need, shared by exact rationals and
/// the floating types. `lift` embeds a rational constant next to `self`,
/// which lets floating values carry their precision into new constants.
pub trait Scalar: Clone {
    fn lift(&self, q: &BigRational) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn divide(&self, other: &Self) -> Option<Self>;
    fn is_zero_value(&self) -> bool;
}

impl Scalar for BigRational {
    fn lift(&self, q: &BigRational) -> Self {
        q.clone()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn divide(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            None
        } else {
            Some(self / other)
        }
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

impl Scalar for ApReal {
    fn lift(&self, q: &BigRational) -> Self {
        ApReal::from_ratio(q, self.prec())
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn divide(&self, other: &Self) -> Option<Self> {
        self.checked_div(other)
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

impl Scalar for ApComplex {
    fn lift(&self, q: &BigRational) -> Self {
        ApComplex::from_real(ApReal::from_ratio(q, self.prec()))
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn divide(&self, other: &Self) -> Option<Self> {
        self.checked_div(other)
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}
