//! Opaque named parameters (Omega, a0, a1, c, eps, ...) and polynomials in
//! them over the rationals. Parameters stay symbolic through all calculus;
//! instantiation substitutes exact rational values.
//!
//! The reserved name `pi` denotes the circle constant. It behaves like any
//! other opaque symbol except that trig-argument construction folds
//! half-integer multiples of it exactly.

use crate::exactalg::Rational;
use std::collections::BTreeMap;
use std::fmt;

pub const PI_SYMBOL: &str = "pi";

/// Product of parameter powers, e.g. `Omega^2 * a0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamMonomial(BTreeMap<String, u32>);

impl ParamMonomial {
    pub fn unit() -> ParamMonomial {
        ParamMonomial::default()
    }

    pub fn symbol(name: &str) -> ParamMonomial {
        let mut m = BTreeMap::new();
        m.insert(name.to_string(), 1);
        ParamMonomial(m)
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &ParamMonomial) -> ParamMonomial {
        let mut out = self.0.clone();
        for (name, pow) in &other.0 {
            *out.entry(name.clone()).or_insert(0) += pow;
        }
        ParamMonomial(out)
    }

    pub fn powers(&self) -> impl Iterator<Item = (&str, u32)> {
        self.0.iter().map(|(n, p)| (n.as_str(), *p))
    }
}

impl fmt::Display for ParamMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(name, pow)| {
                if *pow == 1 {
                    name.clone()
                } else {
                    format!("{name}^{pow}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Polynomial in parameter symbols with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamPoly(BTreeMap<ParamMonomial, Rational>);

impl ParamPoly {
    pub fn zero() -> ParamPoly {
        ParamPoly::default()
    }

    pub fn one() -> ParamPoly {
        ParamPoly::constant(Rational::ONE)
    }

    pub fn constant(r: Rational) -> ParamPoly {
        let mut m = BTreeMap::new();
        if !r.is_zero() {
            m.insert(ParamMonomial::unit(), r);
        }
        ParamPoly(m)
    }

    pub fn symbol(name: &str) -> ParamPoly {
        let mut m = BTreeMap::new();
        m.insert(ParamMonomial::symbol(name), Rational::ONE);
        ParamPoly(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|r| r.is_one())
    }

    /// `Some(r)` when the polynomial is the constant `r`.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.0.is_empty() {
            return Some(Rational::ZERO);
        }
        if self.0.len() == 1 {
            let (mon, coef) = self.0.iter().next().unwrap();
            if mon.is_unit() {
                return Some(*coef);
            }
        }
        None
    }

    /// Coefficient of a bare symbol `name` (the monomial `name^1`).
    pub fn coefficient_of_symbol(&self, name: &str) -> Rational {
        self.0
            .get(&ParamMonomial::symbol(name))
            .copied()
            .unwrap_or(Rational::ZERO)
    }

    pub fn without_symbol_monomial(&self, name: &str) -> ParamPoly {
        let mut out = self.0.clone();
        out.remove(&ParamMonomial::symbol(name));
        ParamPoly(out)
    }

    pub fn add(&self, other: &ParamPoly) -> ParamPoly {
        let mut out = self.0.clone();
        for (mon, coef) in &other.0 {
            let entry = out.entry(mon.clone()).or_insert(Rational::ZERO);
            *entry += *coef;
            if entry.is_zero() {
                out.remove(mon);
            }
        }
        ParamPoly(out)
    }

    pub fn neg(&self) -> ParamPoly {
        ParamPoly(self.0.iter().map(|(m, c)| (m.clone(), -*c)).collect())
    }

    pub fn sub(&self, other: &ParamPoly) -> ParamPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &ParamPoly) -> ParamPoly {
        let mut out: BTreeMap<ParamMonomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.0 {
            for (mb, cb) in &other.0 {
                let mon = ma.mul(mb);
                let entry = out.entry(mon.clone()).or_insert(Rational::ZERO);
                *entry += *ca * *cb;
                if entry.is_zero() {
                    out.remove(&mon);
                }
            }
        }
        ParamPoly(out)
    }

    pub fn scale(&self, r: Rational) -> ParamPoly {
        if r.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly(self.0.iter().map(|(m, c)| (m.clone(), *c * r)).collect())
    }

    /// Sign of the leading (first in monomial order) coefficient; zero
    /// polynomial reports positive.
    pub fn leading_coefficient_is_negative(&self) -> bool {
        self.0
            .values()
            .next()
            .map(Rational::is_negative)
            .unwrap_or(false)
    }

    /// Replace a parameter by an exact rational value.
    pub fn instantiate(&self, name: &str, value: Rational) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (mon, coef) in &self.0 {
            let mut scalar = *coef;
            let mut rest = BTreeMap::new();
            for (sym, pow) in mon.powers() {
                if sym == name {
                    scalar *= value.pow(pow);
                } else {
                    rest.insert(sym.to_string(), pow);
                }
            }
            let term = ParamPoly(BTreeMap::from([(ParamMonomial(rest), scalar)]));
            out = out.add(&term);
        }
        out
    }

    pub fn collect_params(&self, into: &mut std::collections::BTreeSet<String>) {
        for mon in self.0.keys() {
            for (name, _) in mon.powers() {
                into.insert(name.to_string());
            }
        }
    }

    pub fn eval(&self, params: &BTreeMap<String, f64>) -> Result<f64, String> {
        let mut total = 0.0;
        for (mon, coef) in &self.0 {
            let mut v = coef.to_f64();
            for (name, pow) in mon.powers() {
                let base = if name == PI_SYMBOL {
                    std::f64::consts::PI
                } else {
                    *params
                        .get(name)
                        .ok_or_else(|| format!("no value for parameter {name:?}"))?
                };
                v *= base.powi(pow as i32);
            }
            total += v;
        }
        Ok(total)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ParamMonomial, &Rational)> {
        self.0.iter()
    }
}

impl From<Rational> for ParamPoly {
    fn from(r: Rational) -> ParamPoly {
        ParamPoly::constant(r)
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mon, coef) in &self.0 {
            let (sign, mag) = if coef.is_negative() {
                ("-", -*coef)
            } else {
                ("+", *coef)
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if mon.is_unit() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mon}")?;
            } else {
                write!(f, "{mag}*{mon}")?;
            }
        }
        Ok(())
    }
}
