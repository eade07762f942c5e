use super::{rational_is_negative, MathError, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// Dense univariate polynomial over the rationals, coefficients stored from
/// the constant term upwards. Trailing zero coefficients are never stored, so
/// the zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The parameter itself.
    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeffs.first().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead_inv = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if sd < dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let q = &rem[k + dd] * &lead_inv;
            if q.is_zero() {
                continue;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * dc;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Scale to leading coefficient one; the zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let l = self.leading();
        if l.is_one() {
            return self.clone();
        }
        self.scale(&l.recip())
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            // keep coefficients small between steps
            b = r.monic();
        }
        a.monic()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * t + super::rational_to_f64(c);
        }
        acc
    }

    /// Integer coefficients with gcd one and positive leading coefficient,
    /// proportional to `self`.
    pub fn primitive_integer_form(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        for c in ints.iter_mut() {
            *c = &*c / &g * &sign;
        }
        ints
    }

    /// Render in the scalar grammar: descending powers, explicit `*`.
    pub fn to_expr(&self, param: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = rational_is_negative(c);
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let var = match k {
                0 => String::new(),
                1 => param.to_string(),
                _ => format!("{param}^{k}"),
            };
            if var.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&var);
            } else {
                out.push_str(&format!("{mag}*{var}"));
            }
        }
        out
    }

    /// Number of nonzero terms.
    pub(crate) fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// All rational roots of `p`, with multiplicity, in ascending order.
///
/// Candidates come from the rational-root test on the primitive integer form;
/// each accepted root is divided out before the next search.
pub fn poly_rational_roots(p: &Poly) -> Result<Vec<Rational>, MathError> {
    if p.is_zero() {
        return Err(MathError::ZeroPolynomial);
    }
    let mut roots = Vec::new();
    let mut rest = p.clone();
    while rest.degree().unwrap_or(0) > 0 && rest.constant_term().is_zero() {
        roots.push(Rational::zero());
        rest = Poly::from_coeffs(rest.coeffs[1..].to_vec());
    }
    loop {
        if rest.degree().unwrap_or(0) == 0 {
            break;
        }
        let ints = rest.primitive_integer_form();
        let a0 = &ints[0];
        let an = ints.last().unwrap();
        let mut found = None;
        'search: for q in divisors(an) {
            for num in divisors(a0) {
                for cand in [
                    Rational::new(num.clone(), q.clone()),
                    Rational::new(-num.clone(), q.clone()),
                ] {
                    if rest.eval(&cand).is_zero() {
                        found = Some(cand);
                        break 'search;
                    }
                }
            }
        }
        match found {
            Some(r) => {
                let linear = Poly::from_coeffs(vec![-r.clone(), Rational::one()]);
                rest = rest.div_rem(&linear).0;
                roots.push(r);
            }
            None => break,
        }
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    fn p(c: &[i64]) -> Poly {
        Poly::from_coeffs(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn roots_of_linear_and_quadratic() {
        assert_eq!(poly_rational_roots(&Poly::x()).unwrap(), vec![int(0)]);
        assert_eq!(poly_rational_roots(&p(&[-1, 0, 1])).unwrap(), vec![int(-1), int(1)]);
        // (h + 4) / 2 up to scale
        let residual = Poly::from_coeffs(vec![int(2), rat(1, 2)]);
        assert_eq!(poly_rational_roots(&residual).unwrap(), vec![int(-4)]);
    }

    #[test]
    fn roots_with_multiplicity_and_fractions() {
        // (x - 1/2)^2 (x + 3) x
        let f = p(&[-1, 2])
            .pow(2)
            .mul(&p(&[3, 1]))
            .mul(&Poly::x());
        assert_eq!(
            poly_rational_roots(&f).unwrap(),
            vec![int(-3), int(0), rat(1, 2), rat(1, 2)]
        );
        // x^2 - 2 has no rational root
        assert!(poly_rational_roots(&p(&[-2, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert_eq!(poly_rational_roots(&Poly::zero()), Err(MathError::ZeroPolynomial));
    }

    #[test]
    fn gcd_is_monic() {
        let a = p(&[-1, 0, 1]).scale(&int(6));
        let b = p(&[1, 1]).scale(&int(-4));
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        assert_eq!(a.gcd(&Poly::zero()), p(&[-1, 0, 1]));
    }

    #[test]
    fn div_rem_identity() {
        let a = p(&[5, -3, 0, 2, 7]);
        let b = p(&[1, 0, 3]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn expr_rendering() {
        assert_eq!(p(&[-8, 0, 1]).to_expr("h"), "h^2 - 8");
        assert_eq!(Poly::from_coeffs(vec![int(-8), rat(1, 2)]).to_expr("h"), "1/2*h - 8");
        assert_eq!(p(&[0, -1]).to_expr("a"), "-a");
        assert_eq!(Poly::zero().to_expr("h"), "0");
    }
}
