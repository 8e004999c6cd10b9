//! Scalar helpers on top of `BigRational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// `n/d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn ri(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn half() -> Rational {
    rat(1, 2)
}

pub fn to_f64(x: &Rational) -> f64 {
    if let (Some(n), Some(d)) = (x.numer().to_f64(), x.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d < 1e300 {
            return n / d;
        }
    }
    // Integer quotient carrying about 64 significant bits, then rescale.
    let k = 64 - (x.numer().bits() as i64 - x.denom().bits() as i64);
    let q = if k >= 0 {
        (x.numer() << (k as usize)) / x.denom()
    } else {
        x.numer() / (x.denom() << ((-k) as usize))
    };
    libm::ldexp(q.to_f64().unwrap_or(f64::NAN), -(k as i32))
}

/// Nonnegative integer value, if `x` is one.
pub fn as_nonneg_int(x: &Rational) -> Option<u64> {
    if x.is_integer() && !x.is_negative() {
        x.numer().to_u64()
    } else {
        None
    }
}

/// True when `x` is an integer.
pub fn is_int(x: &Rational) -> bool {
    x.is_integer()
}

/// Sign of `x` as -1, 0 or 1.
pub fn sign(x: &Rational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

/// Integer power with a signed exponent.
pub fn powi(x: &Rational, k: i32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k.unsigned_abs() {
        acc *= x;
    }
    if k < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Rising factorial (x)_m = x(x+1)...(x+m-1).
pub fn rising_factorial(x: &Rational, m: u32) -> Rational {
    let mut acc = Rational::one();
    let mut t = x.clone();
    for _ in 0..m {
        acc *= &t;
        t += Rational::one();
    }
    acc
}

/// Falling factorial x(x-1)...(x-m+1).
pub fn falling_factorial(x: &Rational, m: u32) -> Rational {
    let mut acc = Rational::one();
    let mut t = x.clone();
    for _ in 0..m {
        acc *= &t;
        t -= Rational::one();
    }
    acc
}

pub fn factorial(m: u32) -> Rational {
    rising_factorial(&Rational::one(), m)
}

/// Generalized binomial coefficient C(x, k) for rational `x`.
pub fn binomial(x: &Rational, k: u32) -> Rational {
    falling_factorial(x, k) / factorial(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rising_examples() {
        assert_eq!(rising_factorial(&rat(7, 3), 0), ri(1));
        assert_eq!(rising_factorial(&ri(3), 2), ri(12));
        assert_eq!(rising_factorial(&rat(-1, 2), 2), rat(-1, 4));
    }

    #[test]
    fn binomial_matches_integers() {
        assert_eq!(binomial(&ri(5), 2), ri(10));
        assert_eq!(binomial(&ri(2), 3), ri(0));
        assert_eq!(binomial(&ri(-1), 3), ri(-1));
    }

    #[test]
    fn f64_of_huge_ratio() {
        let big = powi(&ri(10), 400) / powi(&ri(10), 398);
        assert!((to_f64(&big) - 100.0).abs() < 1e-9);
    }
}
