//! Canonical symbolic expressions on the chart `(t, lambda, mu, psi)`.
//!
//! An expression is a sum of monomials
//! `t^a * lambda^l * mu^b * psi^c * s^k * prod sin^m cos^n (arg)` with
//! coefficients that are polynomials in opaque parameters. The rewrite
//! rules
//!
//! - `s^2 -> 1 - mu^2` (for `s`-power >= 2),
//! - `mu^2 -> 1 - s^2` (when `s` sits in the denominator),
//! - `cos^2 -> 1 - sin^2` (per argument),
//!
//! terminate in a normal form whose monomials are linearly independent
//! functions, so two expressions describing the same function in this
//! class have identical term maps. Equality is structural.

use super::param::ParamPoly;
use super::trig::{normalize_arg, NormalizedArg, TrigArg, TrigFn};
use super::SymvecError;
use crate::exactalg::Rational;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Chart variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    T,
    Lambda,
    Mu,
    Psi,
}

pub const CHART: [Var; 4] = [Var::T, Var::Lambda, Var::Mu, Var::Psi];

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::Lambda => "lambda",
            Var::Mu => "mu",
            Var::Psi => "psi",
        }
    }
}

/// One canonical monomial.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub(crate) t: u32,
    pub(crate) lambda: u32,
    pub(crate) mu: u32,
    pub(crate) psi: u32,
    /// Power of `s = sqrt(1 - mu^2)`; canonical form keeps it in `{0, 1}`
    /// or negative (with `mu`-power at most 1 in the negative case).
    pub(crate) s: i32,
    /// Argument -> (sin power, cos power); cos power is 0 or 1.
    pub(crate) trig: BTreeMap<TrigArg, (u32, u32)>,
}

impl Monomial {
    fn unit() -> Monomial {
        Monomial::default()
    }

    fn is_unit(&self) -> bool {
        self == &Monomial::unit()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut trig = self.trig.clone();
        for (arg, (m, n)) in &other.trig {
            let entry = trig.entry(arg.clone()).or_insert((0, 0));
            entry.0 += m;
            entry.1 += n;
        }
        Monomial {
            t: self.t + other.t,
            lambda: self.lambda + other.lambda,
            mu: self.mu + other.mu,
            psi: self.psi + other.psi,
            s: self.s + other.s,
            trig,
        }
    }
}

/// Canonical expression: a map monomial -> parameter-polynomial coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expr {
    pub(crate) terms: BTreeMap<Monomial, ParamPoly>,
}

impl Expr {
    pub fn zero() -> Expr {
        Expr::default()
    }

    pub fn one() -> Expr {
        Expr::from_rational(Rational::ONE)
    }

    pub fn from_rational(r: Rational) -> Expr {
        Expr::from_poly(ParamPoly::constant(r))
    }

    pub fn int(n: i64) -> Expr {
        Expr::from_rational(Rational::from(n))
    }

    pub fn from_poly(p: ParamPoly) -> Expr {
        let mut e = Expr::zero();
        if !p.is_zero() {
            e.terms.insert(Monomial::unit(), p);
        }
        e
    }

    pub fn param(name: &str) -> Expr {
        Expr::from_poly(ParamPoly::symbol(name))
    }

    pub fn var(v: Var) -> Expr {
        let mut mon = Monomial::unit();
        match v {
            Var::T => mon.t = 1,
            Var::Lambda => mon.lambda = 1,
            Var::Mu => mon.mu = 1,
            Var::Psi => mon.psi = 1,
        }
        Expr::from_term(mon, ParamPoly::one())
    }

    pub fn t() -> Expr {
        Expr::var(Var::T)
    }

    pub fn lambda() -> Expr {
        Expr::var(Var::Lambda)
    }

    pub fn mu() -> Expr {
        Expr::var(Var::Mu)
    }

    pub fn psi() -> Expr {
        Expr::var(Var::Psi)
    }

    /// `s^k` for the radical `s = sqrt(1 - mu^2)`.
    pub fn s_pow(k: i32) -> Expr {
        let mon = Monomial {
            s: k,
            ..Monomial::unit()
        };
        Expr::from_term(mon, ParamPoly::one())
    }

    pub fn s() -> Expr {
        Expr::s_pow(1)
    }

    /// Insert a raw term, applying the rewrite rules until canonical.
    pub(crate) fn from_term(mon: Monomial, coef: ParamPoly) -> Expr {
        let mut e = Expr::zero();
        e.add_term(mon, coef);
        e
    }

    pub(crate) fn add_term(&mut self, mon: Monomial, coef: ParamPoly) {
        if coef.is_zero() {
            return;
        }
        let mut work = vec![(mon, coef)];
        while let Some((mut mon, coef)) = work.pop() {
            // cos^2 -> 1 - sin^2, one argument at a time.
            if let Some((arg, &(m, n))) = mon.trig.iter().find(|(_, &(_, n))| n >= 2) {
                let arg = arg.clone();
                let mut stripped = mon.clone();
                stripped.trig.remove(&arg);
                // keep any leftover cos parity on the stripped copy
                let mut low = stripped.clone();
                if m > 0 || n - 2 > 0 {
                    low.trig.insert(arg.clone(), (m, n - 2));
                }
                let mut high = stripped;
                high.trig.insert(arg.clone(), (m + 2, n - 2));
                // drop zero-power entries
                if let Some(&(0, 0)) = low.trig.get(&arg) {
                    low.trig.remove(&arg);
                }
                work.push((low, coef.clone()));
                work.push((high, coef.neg()));
                continue;
            }
            // drop fully cancelled trig entries
            mon.trig.retain(|_, &mut (m, n)| m > 0 || n > 0);
            // s^2 -> 1 - mu^2.
            if mon.s >= 2 {
                let mut low = mon.clone();
                low.s -= 2;
                let mut high = low.clone();
                high.mu += 2;
                work.push((low, coef.clone()));
                work.push((high, coef.neg()));
                continue;
            }
            // mu^2 -> 1 - s^2 whenever s is inverted.
            if mon.s < 0 && mon.mu >= 2 {
                let mut low = mon.clone();
                low.mu -= 2;
                let mut high = low.clone();
                high.s += 2;
                work.push((low, coef.clone()));
                work.push((high, coef.neg()));
                continue;
            }
            let entry = self
                .terms
                .entry(mon)
                .or_insert_with(ParamPoly::zero);
            *entry = entry.add(&coef);
            if entry.is_zero() {
                // re-fetch key: remove empties lazily below
            }
        }
        self.terms.retain(|_, c| !c.is_zero());
    }

    /// `sin` of an affine argument in `t` and `lambda` (plus constants).
    pub fn sin(arg: &Expr) -> Result<Expr, SymvecError> {
        Expr::trig_of(arg, TrigFn::Sin)
    }

    /// `cos` of an affine argument in `t` and `lambda` (plus constants).
    pub fn cos(arg: &Expr) -> Result<Expr, SymvecError> {
        Expr::trig_of(arg, TrigFn::Cos)
    }

    fn trig_of(arg: &Expr, which: TrigFn) -> Result<Expr, SymvecError> {
        let (t_coef, lambda_coef, const_coef) =
            arg.as_affine_tl().ok_or_else(|| SymvecError::NonAffineArgument {
                expr: arg.to_string(),
            })?;
        Ok(match normalize_arg(t_coef, lambda_coef, const_coef) {
            NormalizedArg::Constant { sin, cos } => Expr::from_rational(match which {
                TrigFn::Sin => sin,
                TrigFn::Cos => cos,
            }),
            NormalizedArg::Arg(canon, fold) => {
                let (sign, target) = match which {
                    TrigFn::Sin => (fold.sin_sign, fold.sin_fn),
                    TrigFn::Cos => (fold.cos_sign, fold.cos_fn),
                };
                let mut mon = Monomial::unit();
                mon.trig.insert(
                    canon,
                    match target {
                        TrigFn::Sin => (1, 0),
                        TrigFn::Cos => (0, 1),
                    },
                );
                Expr::from_term(mon, ParamPoly::constant(sign))
            }
        })
    }

    /// Decompose as `c_t * t + c_l * lambda + c_0`; `None` when any term
    /// falls outside that shape.
    pub fn as_affine_tl(&self) -> Option<(ParamPoly, ParamPoly, ParamPoly)> {
        let mut t_coef = ParamPoly::zero();
        let mut lambda_coef = ParamPoly::zero();
        let mut const_coef = ParamPoly::zero();
        for (mon, coef) in &self.terms {
            if mon.mu != 0 || mon.psi != 0 || mon.s != 0 || !mon.trig.is_empty() {
                return None;
            }
            match (mon.t, mon.lambda) {
                (0, 0) => const_coef = const_coef.add(coef),
                (1, 0) => t_coef = t_coef.add(coef),
                (0, 1) => lambda_coef = lambda_coef.add(coef),
                _ => return None,
            }
        }
        Some((t_coef, lambda_coef, const_coef))
    }

    /// Affine decomposition in `psi`: `(a, b)` with `self = a * psi + b`
    /// and neither part containing `psi`.
    pub fn as_affine_psi(&self) -> Option<(Expr, Expr)> {
        let mut linear = Expr::zero();
        let mut rest = Expr::zero();
        for (mon, coef) in &self.terms {
            match mon.psi {
                0 => rest.add_term(mon.clone(), coef.clone()),
                1 => {
                    let mut m = mon.clone();
                    m.psi = 0;
                    linear.add_term(m, coef.clone());
                }
                _ => return None,
            }
        }
        Some((linear, rest))
    }

    pub fn is_zero_expr(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(r)` when the expression is the constant rational `r`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::ZERO);
        }
        if self.terms.len() == 1 {
            let (mon, coef) = self.terms.iter().next().unwrap();
            if mon.is_unit() {
                return coef.as_constant();
            }
        }
        None
    }

    pub fn pow(&self, n: u32) -> Expr {
        let mut out = Expr::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    pub fn scale(&self, r: Rational) -> Expr {
        if r.is_zero() {
            return Expr::zero();
        }
        Expr {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.scale(r)))
                .collect(),
        }
    }

    /// Exact partial derivative, canonicalized.
    pub fn differentiate(&self, v: Var) -> Expr {
        let mut out = Expr::zero();
        for (mon, coef) in &self.terms {
            match v {
                Var::T | Var::Lambda => {
                    let power = if v == Var::T { mon.t } else { mon.lambda };
                    if power > 0 {
                        let mut m = mon.clone();
                        if v == Var::T {
                            m.t -= 1;
                        } else {
                            m.lambda -= 1;
                        }
                        out.add_term(m, coef.scale(Rational::integer(power as i128)));
                    }
                    for (arg, &(sin_pow, cos_pow)) in &mon.trig {
                        let arg_coef = if v == Var::T {
                            arg.t_coef().clone()
                        } else {
                            arg.lambda_coef().clone()
                        };
                        if arg_coef.is_zero() {
                            continue;
                        }
                        // d sin^m cos^n = (m sin^{m-1} cos^{n+1} - n sin^{m+1} cos^{n-1}) * d(arg)
                        if sin_pow > 0 {
                            let mut m = mon.clone();
                            m.trig.insert(arg.clone(), (sin_pow - 1, cos_pow + 1));
                            out.add_term(
                                m,
                                coef.mul(&arg_coef).scale(Rational::integer(sin_pow as i128)),
                            );
                        }
                        if cos_pow > 0 {
                            let mut m = mon.clone();
                            m.trig.insert(arg.clone(), (sin_pow + 1, cos_pow - 1));
                            out.add_term(
                                m,
                                coef.mul(&arg_coef)
                                    .scale(-Rational::integer(cos_pow as i128)),
                            );
                        }
                    }
                }
                Var::Mu => {
                    if mon.mu > 0 {
                        let mut m = mon.clone();
                        m.mu -= 1;
                        out.add_term(m, coef.scale(Rational::integer(mon.mu as i128)));
                    }
                    // d(s^k)/dmu = -k mu s^{k-2}
                    if mon.s != 0 {
                        let mut m = mon.clone();
                        m.mu += 1;
                        m.s -= 2;
                        out.add_term(m, coef.scale(Rational::integer(-(mon.s as i128))));
                    }
                }
                Var::Psi => {
                    if mon.psi > 0 {
                        let mut m = mon.clone();
                        m.psi -= 1;
                        out.add_term(m, coef.scale(Rational::integer(mon.psi as i128)));
                    }
                }
            }
        }
        out
    }

    /// Substitute an exact rational value for a parameter.
    pub fn instantiate(&self, name: &str, value: Rational) -> Expr {
        let mut out = Expr::zero();
        for (mon, coef) in &self.terms {
            // Parameters also sit inside trig arguments.
            let new_coef = coef.instantiate(name, value);
            if mon.trig.is_empty() {
                out.add_term(mon.clone(), new_coef);
                continue;
            }
            let mut factor = Expr::from_term(
                Monomial {
                    trig: BTreeMap::new(),
                    ..mon.clone()
                },
                new_coef,
            );
            for (arg, &(sin_pow, cos_pow)) in &mon.trig {
                let arg_expr = Expr::from_poly(arg.t_coef().instantiate(name, value))
                    * Expr::t()
                    + Expr::from_poly(arg.lambda_coef().instantiate(name, value)) * Expr::lambda()
                    + Expr::from_poly(arg.const_coef().instantiate(name, value));
                let sin = Expr::sin(&arg_expr).expect("affine by construction");
                let cos = Expr::cos(&arg_expr).expect("affine by construction");
                factor = factor * sin.pow(sin_pow) * cos.pow(cos_pow);
            }
            out = out + factor;
        }
        out
    }

    pub fn collect_params(&self, into: &mut std::collections::BTreeSet<String>) {
        for (mon, coef) in &self.terms {
            coef.collect_params(into);
            for arg in mon.trig.keys() {
                arg.t_coef().collect_params(into);
                arg.lambda_coef().collect_params(into);
                arg.const_coef().collect_params(into);
            }
        }
    }

    pub(crate) fn terms(&self) -> impl Iterator<Item = (&Monomial, &ParamPoly)> {
        self.terms.iter()
    }
}

impl Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        let mut out = self;
        for (mon, coef) in rhs.terms {
            out.add_term(mon, coef);
        }
        out
    }
}

impl Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        self + (-rhs)
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr {
            terms: self.terms.into_iter().map(|(m, c)| (m, c.neg())).collect(),
        }
    }
}

impl Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        &self * &rhs
    }
}

impl Mul for &Expr {
    type Output = Expr;
    fn mul(self, rhs: &Expr) -> Expr {
        let mut out = Expr::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (power, name) in [
            (self.t, "t"),
            (self.lambda, "lambda"),
            (self.mu, "mu"),
            (self.psi, "psi"),
        ] {
            match power {
                0 => {}
                1 => parts.push(name.to_string()),
                p => parts.push(format!("{name}^{p}")),
            }
        }
        match self.s {
            0 => {}
            1 => parts.push("s".to_string()),
            k => parts.push(format!("s^{k}")),
        }
        for (arg, &(m, n)) in &self.trig {
            if m == 1 {
                parts.push(format!("sin({arg})"));
            } else if m > 1 {
                parts.push(format!("sin({arg})^{m}"));
            }
            if n == 1 {
                parts.push(format!("cos({arg})"));
            } else if n > 1 {
                parts.push(format!("cos({arg})^{n}"));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mon, coef) in &self.terms {
            let coef_str = coef.to_string();
            let simple_positive = coef.as_constant().map(|r| !r.is_negative()).unwrap_or(false)
                || (coef.terms().count() == 1 && !coef.leading_coefficient_is_negative());
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            if mon.is_unit() {
                if simple_positive {
                    write!(f, "{coef_str}")?;
                } else {
                    write!(f, "({coef_str})")?;
                }
            } else if coef.is_one() {
                write!(f, "{mon}")?;
            } else if simple_positive {
                write!(f, "{coef_str}*{mon}")?;
            } else {
                write!(f, "({coef_str})*{mon}")?;
            }
        }
        Ok(())
    }
}
