use super::{Field, Poly, Rational};

/// Rational function in one parameter, kept in canonical form: numerator and
/// denominator coprime, denominator monic. Equal values therefore have equal
/// representations and derived `PartialEq` is value equality.
///
/// The parameter's name is not stored here; the owning structure (metric,
/// extension) carries it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamScalar {
    num: Poly,
    den: Poly,
}

impl ParamScalar {
    /// Builds and canonicalizes `num / den`. `None` if `den` is the zero
    /// polynomial.
    pub fn new(num: Poly, den: Poly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        if den.is_constant() {
            let d = den.leading().recip();
            return Some(ParamScalar {
                num: num.scale(&d),
                den: Poly::one(),
            });
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lead = den.leading();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Some(ParamScalar { num, den })
    }

    pub fn from_rational(r: Rational) -> Self {
        ParamScalar {
            num: Poly::constant(r),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        ParamScalar {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn param() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    /// True when the value does not depend on the parameter.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.is_constant().then(|| self.num.constant_term())
    }

    /// Value at `t`, or `None` if the denominator vanishes there.
    pub fn eval(&self, t: &Rational) -> Option<Rational> {
        let d = self.den.eval(t);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(t) / d)
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.num.eval_f64(t) / self.den.eval_f64(t)
    }

    pub fn pow(&self, k: u32) -> Self {
        ParamScalar {
            num: self.num.pow(k),
            den: self.den.pow(k),
        }
    }

    /// Render in the scalar grammar, using `param` for the parameter.
    pub fn to_expr(&self, param: &str) -> String {
        let num = self.num.to_expr(param);
        if self.den.is_one() {
            return num;
        }
        let num = if self.num.term_count() > 1 {
            format!("({num})")
        } else {
            num
        };
        let den = self.den.to_expr(param);
        if self.den.term_count() > 1 {
            format!("{num}/({den})")
        } else {
            format!("{num}/{den}")
        }
    }
}

impl From<Rational> for ParamScalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl PartialEq<Rational> for ParamScalar {
    fn eq(&self, other: &Rational) -> bool {
        self.as_rational().is_some_and(|r| &r == other)
    }
}

impl Field for ParamScalar {
    fn zero() -> Self {
        ParamScalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    fn one() -> Self {
        Self::from_rational(<Rational as Field>::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        if self.num.is_zero() {
            return other.clone();
        }
        if other.num.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.add(&other.num));
        }
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone()).unwrap();
        }
        Self::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
        .unwrap()
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        if self.num.is_zero() || other.num.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        if self.is_constant() {
            return ParamScalar {
                num: other.num.scale(&self.num.constant_term()),
                den: other.den.clone(),
            };
        }
        if other.is_constant() {
            return ParamScalar {
                num: self.num.scale(&other.num.constant_term()),
                den: self.den.clone(),
            };
        }
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den)).unwrap()
    }

    fn neg(&self) -> Self {
        ParamScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Self::new(self.den.clone(), self.num.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    #[test]
    fn canonical_form_is_unique() {
        // (2h^2 - 2) / (4h + 4) == (h - 1)/2
        let a = ParamScalar::new(
            Poly::from_coeffs(vec![int(-2), int(0), int(2)]),
            Poly::from_coeffs(vec![int(4), int(4)]),
        )
        .unwrap();
        let b = ParamScalar::new(
            Poly::from_coeffs(vec![rat(-1, 2), rat(1, 2)]),
            Poly::one(),
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_expr("h"), "1/2*h - 1/2");
    }

    #[test]
    fn constants_compare_with_rationals() {
        let s = ParamScalar::from_rational(rat(-5, 4));
        assert_eq!(s, rat(-5, 4));
        assert!(ParamScalar::param() != int(0));
    }

    #[test]
    fn field_inverse() {
        let h = ParamScalar::param();
        let a = h.add(&ParamScalar::from(int(3))).mul(&h.inv().unwrap());
        assert!(a.mul(&a.inv().unwrap()).is_one());
        assert!(ParamScalar::zero().inv().is_none());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(ParamScalar::new(Poly::one(), Poly::zero()).is_none());
    }
}
