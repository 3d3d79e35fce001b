//! Exact arithmetic in the cyclotomic field `Q(zeta_n)`.
//!
//! A scalar is stored in the canonical basis `1, z, ..., z^{phi(n)-1}` of
//! `Q[x]/(Phi_n)` where `z` stands for the primitive n-th root of unity and
//! `Phi_n` is the n-th cyclotomic polynomial. Coefficients are
//! arbitrary-precision rationals, so every operation (including inversion) is
//! exact and every value has a unique representation: equality of scalars is
//! coefficient-vector equality.
//!
//! [`CycloCtx::eval_f64`] is the only floating-point routine here; it exists
//! as a numeric cross-check for tests and diagnostics, never as an input to
//! the algebra.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("cyclotomic modulus must be at least 1")]
    InvalidModulus,
    #[error("division by zero in Q(zeta_{n})")]
    DivisionByZero { n: u32 },
    #[error("invalid scalar literal at byte {pos}: {message}")]
    Parse { pos: usize, message: String },
}

/// Coefficients of the n-th cyclotomic polynomial `Phi_n`, ascending in
/// degree.
///
/// Computed by exact division: `Phi_n(x) = (x^n - 1) / prod_{d|n, d<n}
/// Phi_d(x)`, recursing through the divisors of `n`. The result is always
/// monic with integer coefficients.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigRational> {
    assert!(n >= 1, "cyclotomic polynomial requires n >= 1");
    let mut known: Vec<(u32, Vec<BigRational>)> = Vec::new();
    for k in 1..=n {
        if n % k != 0 {
            continue;
        }
        let mut poly = x_pow_minus_one(k as usize);
        for (d, phi_d) in &known {
            if k % d == 0 {
                poly = poly_div_exact(&poly, phi_d);
            }
        }
        known.push((k, poly));
    }
    known.pop().expect("n has at least one divisor").1
}

/// Arithmetic context for `Q(zeta_n)`: the reduction polynomial and a table
/// of all root powers `z^0 .. z^{n-1}` in canonical form.
///
/// All field operations live on the context so that scalars themselves stay
/// plain coefficient vectors. Contexts compare equal iff they share the same
/// `n`.
#[derive(Clone, Debug)]
pub struct CycloCtx {
    n: u32,
    phi: Vec<BigRational>,
    root_powers: Vec<Cyclo>,
}

/// An element of `Q(zeta_n)` in canonical form: exactly `phi(n)` rational
/// coefficients over the power basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cyclo {
    coeffs: Vec<BigRational>,
}

impl PartialEq for CycloCtx {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
    }
}

impl Eq for CycloCtx {}

impl CycloCtx {
    pub fn new(n: u32) -> Result<Self, ScalarError> {
        if n == 0 {
            return Err(ScalarError::InvalidModulus);
        }
        let phi = cyclotomic_polynomial(n);
        let degree = phi.len() - 1;
        let mut root_powers = Vec::with_capacity(n as usize);
        let mut power = vec![BigRational::one()];
        for _ in 0..n {
            root_powers.push(Cyclo {
                coeffs: pad(reduce_poly(power.clone(), &phi), degree),
            });
            power.insert(0, BigRational::zero());
        }
        Ok(CycloCtx { n, phi, root_powers })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Degree of the field extension, `phi(n)`.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    /// The reduction polynomial `Phi_n`, ascending coefficients.
    pub fn modulus(&self) -> &[BigRational] {
        &self.phi
    }

    pub fn zero(&self) -> Cyclo {
        Cyclo {
            coeffs: vec![BigRational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> Cyclo {
        self.from_int(1)
    }

    pub fn from_int(&self, value: i64) -> Cyclo {
        self.from_ratio(BigRational::from_integer(BigInt::from(value)))
    }

    pub fn from_ratio(&self, value: BigRational) -> Cyclo {
        let mut coeffs = vec![BigRational::zero(); self.degree()];
        coeffs[0] = value;
        Cyclo { coeffs }
    }

    /// The root power `z^k`, with `k` taken mod `n` (negative exponents
    /// allowed).
    pub fn root(&self, k: i64) -> Cyclo {
        let k = k.rem_euclid(self.n as i64) as usize;
        self.root_powers[k].clone()
    }

    /// Canonical form of an arbitrary polynomial in `z` (any degree).
    pub fn reduce(&self, coeffs: &[BigRational]) -> Cyclo {
        Cyclo {
            coeffs: pad(reduce_poly(coeffs.to_vec(), &self.phi), self.degree()),
        }
    }

    pub fn add(&self, a: &Cyclo, b: &Cyclo) -> Cyclo {
        Cyclo {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    pub fn sub(&self, a: &Cyclo, b: &Cyclo) -> Cyclo {
        Cyclo {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| x - y)
                .collect(),
        }
    }

    pub fn neg(&self, a: &Cyclo) -> Cyclo {
        Cyclo {
            coeffs: a.coeffs.iter().map(|x| -x).collect(),
        }
    }

    pub fn scale(&self, a: &Cyclo, r: &BigRational) -> Cyclo {
        Cyclo {
            coeffs: a.coeffs.iter().map(|x| x * r).collect(),
        }
    }

    pub fn mul(&self, a: &Cyclo, b: &Cyclo) -> Cyclo {
        self.reduce(&poly_mul(&a.coeffs, &b.coeffs))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in
    /// `Q[x]`. Fails only on zero; `Phi_n` is irreducible, so every nonzero
    /// residue is a unit.
    pub fn inv(&self, a: &Cyclo) -> Result<Cyclo, ScalarError> {
        if a.is_zero() {
            return Err(ScalarError::DivisionByZero { n: self.n });
        }
        let (g, u) = poly_half_ext_gcd(&a.coeffs, &self.phi);
        assert!(
            g.len() == 1,
            "Phi_n is irreducible, gcd with a nonzero residue must be constant"
        );
        let ginv = g[0].recip();
        let scaled: Vec<BigRational> = u.iter().map(|c| c * &ginv).collect();
        Ok(self.reduce(&scaled))
    }

    pub fn div(&self, a: &Cyclo, b: &Cyclo) -> Result<Cyclo, ScalarError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Numeric evaluation at `zeta_n = exp(2 pi i / n)`, returned as
    /// `(re, im)`. Test/diagnostic aid only.
    pub fn eval_f64(&self, a: &Cyclo) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in a.coeffs.iter().enumerate() {
            let c = c.to_f64().expect("coefficient representable as f64");
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (self.n as f64);
            re += c * theta.cos();
            im += c * theta.sin();
        }
        (re, im)
    }

    /// Parse a scalar literal: a sum of terms `c`, `z^k` or `c*z^k` where `c`
    /// is a rational `p` or `p/q`. Examples: `-1/2*z^3 + 2`, `z`, `0`.
    pub fn parse(&self, input: &str) -> Result<Cyclo, ScalarError> {
        let mut parser = LiteralParser {
            bytes: input.as_bytes(),
            pos: 0,
        };
        parser.skip_ws();
        let mut acc = self.zero();
        let mut first = true;
        loop {
            let negative = parser.read_sign(first)?;
            let (coeff, power) = parser.read_term()?;
            let signed = if negative { -coeff } else { coeff };
            let term = match power {
                Some(k) => self.scale(&self.root(k), &signed),
                None => self.from_ratio(signed),
            };
            acc = self.add(&acc, &term);
            first = false;
            parser.skip_ws();
            if parser.at_end() {
                return Ok(acc);
            }
        }
    }
}

impl Cyclo {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// Scalars render as the same literal syntax [`CycloCtx::parse`] accepts,
/// with terms in ascending powers of `z`: e.g. `2 - 1/2*z^3`.
impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(usize, &BigRational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in terms.iter().enumerate() {
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if *k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

struct LiteralParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl LiteralParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn at_end(&self) -> bool {
        self.pos == self.bytes.len()
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn error(&self, message: &str) -> ScalarError {
        ScalarError::Parse {
            pos: self.pos,
            message: message.to_string(),
        }
    }

    /// Leading sign of a term. The first term may omit it; later terms must
    /// be joined by `+` or `-`.
    fn read_sign(&mut self, first: bool) -> Result<bool, ScalarError> {
        self.skip_ws();
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                Ok(false)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(true)
            }
            _ if first => Ok(false),
            _ => Err(self.error("expected '+' or '-' between terms")),
        }
    }

    /// One term: returns the rational coefficient and the power of `z`, if
    /// present.
    fn read_term(&mut self) -> Result<(BigRational, Option<i64>), ScalarError> {
        self.skip_ws();
        match self.peek() {
            Some(b'z') => {
                let k = self.read_zpow()?;
                Ok((BigRational::one(), Some(k)))
            }
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.read_rational()?;
                self.skip_ws();
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.skip_ws();
                    if self.peek() != Some(b'z') {
                        return Err(self.error("expected 'z' after '*'"));
                    }
                    let k = self.read_zpow()?;
                    Ok((coeff, Some(k)))
                } else {
                    Ok((coeff, None))
                }
            }
            _ => Err(self.error("expected a rational number or 'z'")),
        }
    }

    fn read_zpow(&mut self) -> Result<i64, ScalarError> {
        debug_assert_eq!(self.peek(), Some(b'z'));
        self.pos += 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let digits = self.read_digits()?;
            digits
                .parse::<i64>()
                .map_err(|_| self.error("exponent out of range"))
        } else {
            Ok(1)
        }
    }

    fn read_rational(&mut self) -> Result<BigRational, ScalarError> {
        let numer: BigInt = self
            .read_digits()?
            .parse()
            .expect("digit string parses as integer");
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let denom: BigInt = self
                .read_digits()?
                .parse()
                .expect("digit string parses as integer");
            if denom.is_zero() {
                return Err(self.error("zero denominator"));
            }
            Ok(BigRational::new(numer, denom))
        } else {
            Ok(BigRational::from_integer(numer))
        }
    }

    fn read_digits(&mut self) -> Result<String, ScalarError> {
        let start = self.pos;
        while self
            .peek()
            .map(|c| c.is_ascii_digit())
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii digits are valid utf8")
            .to_string())
    }
}

fn pad(mut coeffs: Vec<BigRational>, degree: usize) -> Vec<BigRational> {
    debug_assert!(coeffs.len() <= degree);
    coeffs.resize(degree, BigRational::zero());
    coeffs
}

fn x_pow_minus_one(k: usize) -> Vec<BigRational> {
    let mut poly = vec![BigRational::zero(); k + 1];
    poly[0] = -BigRational::one();
    poly[k] = BigRational::one();
    poly
}

fn trim(poly: &mut Vec<BigRational>) {
    while poly.last().map(|c| c.is_zero()).unwrap_or(false) {
        poly.pop();
    }
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] += x * y;
        }
    }
    out
}

/// Quotient and remainder of polynomial division over `Q`.
fn poly_divmod(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = num.to_vec();
    trim(&mut rem);
    let mut den = den.to_vec();
    trim(&mut den);
    assert!(!den.is_empty(), "division by the zero polynomial");
    if rem.len() < den.len() {
        return (Vec::new(), rem);
    }
    let lead = den.last().expect("trimmed divisor is nonempty").clone();
    let mut quot = vec![BigRational::zero(); rem.len() - den.len() + 1];
    for k in (0..quot.len()).rev() {
        let coeff = &rem[k + den.len() - 1] / &lead;
        if coeff.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            let delta = &coeff * d;
            rem[k + j] -= delta;
        }
        quot[k] = coeff;
    }
    trim(&mut rem);
    (quot, rem)
}

fn poly_div_exact(num: &[BigRational], den: &[BigRational]) -> Vec<BigRational> {
    let (quot, rem) = poly_divmod(num, den);
    assert!(rem.is_empty(), "inexact polynomial division");
    quot
}

fn reduce_poly(poly: Vec<BigRational>, phi: &[BigRational]) -> Vec<BigRational> {
    let (_, rem) = poly_divmod(&poly, phi);
    rem
}

/// Extended gcd returning `(g, u)` with `u*a + v*b = g` (the `v` cofactor is
/// not needed for inversion).
fn poly_half_ext_gcd(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut u0 = vec![BigRational::one()];
    let mut u1: Vec<BigRational> = Vec::new();
    while !r1.is_empty() {
        let (q, r) = poly_divmod(&r0, &r1);
        let qu = poly_mul(&q, &u1);
        let mut next_u = u0.clone();
        next_u.resize(next_u.len().max(qu.len()), BigRational::zero());
        for (i, c) in qu.iter().enumerate() {
            next_u[i] -= c;
        }
        trim(&mut next_u);
        r0 = std::mem::take(&mut r1);
        r1 = r;
        u0 = std::mem::take(&mut u1);
        u1 = next_u;
    }
    (r0, u0)
}
