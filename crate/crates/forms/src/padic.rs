//! Capped-precision exact arithmetic in `Z_p` and `Q_p`.
//!
//! A nonzero value is stored as `p^val * unit` with the unit part known to
//! `rel` p-adic digits, so the value is determined modulo `p^(val+rel)`.
//! A value indistinguishable from zero carries only its absolute precision.
//! Arithmetic never claims more precision than the operands support: sums
//! are correct modulo `p^min(absolute precisions)`, products keep the
//! minimum relative precision.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// `p^e` as a big unsigned integer.
pub fn pow_p(p: u64, e: u32) -> BigUint {
    BigUint::from(p).pow(e)
}

/// Inverse of `a` modulo `m`, for `a` coprime to `m`.
pub fn mod_inverse(a: &BigUint, m: &BigUint) -> Result<BigUint> {
    let a = BigInt::from(a.clone());
    let m_int = BigInt::from(m.clone());
    let ext = a.extended_gcd(&m_int);
    if !ext.gcd.is_one() {
        return Err(Error::domain("not invertible at this modulus"));
    }
    Ok(reduce_mod(&ext.x, m))
}

/// Least nonnegative residue of a signed integer.
pub fn reduce_mod(x: &BigInt, m: &BigUint) -> BigUint {
    let m_int = BigInt::from(m.clone());
    let r = x.mod_floor(&m_int);
    r.to_biguint().expect("mod_floor is nonnegative")
}

fn val_p_biguint(p: u64, n: &BigUint) -> u32 {
    debug_assert!(!n.is_zero());
    let p_big = BigUint::from(p);
    let mut v = 0u32;
    let mut n = n.clone();
    loop {
        let (q, r) = n.div_rem(&p_big);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        n = q;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    /// Indistinguishable from zero: the value is `O(p^abs)`.
    Zero { abs: i64 },
    /// `p^val * unit`, `unit` coprime to `p` and reduced modulo `p^rel`.
    Unit { val: i64, rel: u32, unit: BigUint },
}

/// An element of `Q_p` at capped precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicNumber {
    p: u64,
    repr: Repr,
}

impl PadicNumber {
    /// Zero known modulo `p^abs`.
    pub fn zero(p: u64, abs: i64) -> Self {
        PadicNumber { p, repr: Repr::Zero { abs } }
    }

    pub fn one(p: u64, rel: u32) -> Self {
        PadicNumber::from_parts(p, 0, rel, BigUint::one())
    }

    /// `p^val * unit` with `unit` a p-adic unit, truncated to `rel` digits.
    pub fn from_parts(p: u64, val: i64, rel: u32, unit: BigUint) -> Self {
        assert!(rel >= 1, "relative precision must be >= 1");
        let m = pow_p(p, rel);
        let u = &unit % &m;
        assert!(
            !(&u % p).is_zero(),
            "unit part divisible by p (p={p}, unit={unit})"
        );
        PadicNumber { p, repr: Repr::Unit { val, rel, unit: u } }
    }

    /// An integer seen in `Z_p`, with `rel` digits of the unit part kept.
    pub fn from_bigint(p: u64, n: &BigInt, rel: u32) -> Self {
        if n.is_zero() {
            return PadicNumber::zero(p, rel as i64);
        }
        let mag = n.magnitude();
        let v = val_p_biguint(p, mag);
        let unit_mag = mag / pow_p(p, v);
        let m = pow_p(p, rel);
        let unit = if n.sign() == Sign::Minus {
            (&m - unit_mag % &m) % &m
        } else {
            unit_mag % &m
        };
        // Sign flip cannot make the residue zero: unit_mag is coprime to p.
        PadicNumber::from_parts(p, v as i64, rel, unit)
    }

    pub fn from_i64(p: u64, n: i64, rel: u32) -> Self {
        PadicNumber::from_bigint(p, &BigInt::from(n), rel)
    }

    /// `num/den` seen in `Q_p`.
    pub fn from_ratio(p: u64, num: &BigInt, den: &BigInt, rel: u32) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::domain("division by zero"));
        }
        if num.is_zero() {
            return Ok(PadicNumber::zero(p, rel as i64));
        }
        let vn = val_p_biguint(p, num.magnitude()) as i64;
        let vd = val_p_biguint(p, den.magnitude()) as i64;
        let m = pow_p(p, rel);
        let nu = reduce_mod(&(num / BigInt::from(pow_p(p, vn as u32))), &m);
        let du = reduce_mod(&(den / BigInt::from(pow_p(p, vd as u32))), &m);
        let unit = (nu * mod_inverse(&du, &m)?) % &m;
        Ok(PadicNumber::from_parts(p, vn - vd, rel, unit))
    }

    pub fn from_rational(p: u64, q: &num_rational::BigRational, rel: u32) -> Result<Self> {
        PadicNumber::from_ratio(p, q.numer(), q.denom(), rel)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// Valuation, or `None` when the value is indistinguishable from zero.
    pub fn valuation(&self) -> Option<i64> {
        match &self.repr {
            Repr::Zero { .. } => None,
            Repr::Unit { val, .. } => Some(*val),
        }
    }

    pub fn is_zero_at_precision(&self) -> bool {
        matches!(self.repr, Repr::Zero { .. })
    }

    /// The value is known modulo `p^(abs_precision())`.
    pub fn abs_precision(&self) -> i64 {
        match &self.repr {
            Repr::Zero { abs } => *abs,
            Repr::Unit { val, rel, .. } => val + *rel as i64,
        }
    }

    pub fn rel_precision(&self) -> Option<u32> {
        match &self.repr {
            Repr::Zero { .. } => None,
            Repr::Unit { rel, .. } => Some(*rel),
        }
    }

    pub fn unit_part(&self) -> Option<&BigUint> {
        match &self.repr {
            Repr::Zero { .. } => None,
            Repr::Unit { unit, .. } => Some(unit),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.valuation() == Some(0)
    }

    /// Least nonnegative residue modulo `p^digits`; requires valuation >= 0.
    pub fn integer_residue(&self, digits: u32) -> Result<BigUint> {
        if self.abs_precision() < digits as i64 {
            return Err(Error::precision(format!(
                "value known mod p^{} only, residue mod p^{digits} requested",
                self.abs_precision()
            )));
        }
        match &self.repr {
            Repr::Zero { .. } => Ok(BigUint::zero()),
            Repr::Unit { val, unit, .. } => {
                if *val < 0 {
                    return Err(Error::domain("negative valuation has no integer residue"));
                }
                Ok((pow_p(self.p, *val as u32) * unit) % pow_p(self.p, digits))
            }
        }
    }

    /// Cap the relative precision at `rel`.
    pub fn reduce_rel(&self, rel: u32) -> Self {
        match &self.repr {
            Repr::Zero { .. } => self.clone(),
            Repr::Unit { val, rel: r, unit } => {
                let nr = rel.min(*r);
                PadicNumber::from_parts(self.p, *val, nr, unit % pow_p(self.p, nr))
            }
        }
    }

    /// Cap the absolute precision at `abs`.
    pub fn reduce_abs(&self, abs: i64) -> Self {
        match &self.repr {
            Repr::Zero { abs: a } => PadicNumber::zero(self.p, (*a).min(abs)),
            Repr::Unit { val, rel, unit } => {
                if abs <= *val {
                    return PadicNumber::zero(self.p, abs.min(*val + *rel as i64));
                }
                let nr = ((abs - *val) as u32).min(*rel);
                PadicNumber::from_parts(self.p, *val, nr, unit % pow_p(self.p, nr))
            }
        }
    }

    fn check_compat(&self, other: &Self) {
        assert_eq!(self.p, other.p, "mixed primes in p-adic arithmetic");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compat(other);
        let abs = self.abs_precision().min(other.abs_precision());
        // Scale so both representatives become integers.
        let shift = self
            .valuation()
            .unwrap_or(0)
            .min(other.valuation().unwrap_or(0))
            .min(0);
        if abs <= shift {
            return PadicNumber::zero(self.p, abs);
        }
        let digits = (abs - shift) as u32;
        let m = pow_p(self.p, digits);
        let rep = |x: &PadicNumber| -> BigUint {
            match &x.repr {
                Repr::Zero { .. } => BigUint::zero(),
                Repr::Unit { val, unit, .. } => {
                    (pow_p(x.p, (*val - shift) as u32) * unit) % &m
                }
            }
        };
        let sum = (rep(self) + rep(other)) % &m;
        PadicNumber::from_scaled_residue(self.p, sum, shift, abs)
    }

    fn from_scaled_residue(p: u64, residue: BigUint, shift: i64, abs: i64) -> Self {
        if residue.is_zero() {
            return PadicNumber::zero(p, abs);
        }
        let v = val_p_biguint(p, &residue) as i64 + shift;
        if v >= abs {
            return PadicNumber::zero(p, abs);
        }
        let unit = residue / pow_p(p, (v - shift) as u32);
        PadicNumber::from_parts(p, v, (abs - v) as u32, unit)
    }

    pub fn neg(&self) -> Self {
        match &self.repr {
            Repr::Zero { .. } => self.clone(),
            Repr::Unit { val, rel, unit } => {
                let m = pow_p(self.p, *rel);
                PadicNumber::from_parts(self.p, *val, *rel, (&m - unit) % &m)
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_compat(other);
        match (&self.repr, &other.repr) {
            (Repr::Zero { abs: a }, Repr::Zero { abs: b }) => {
                PadicNumber::zero(self.p, a + b)
            }
            (Repr::Zero { abs }, Repr::Unit { val, .. })
            | (Repr::Unit { val, .. }, Repr::Zero { abs }) => {
                PadicNumber::zero(self.p, abs + val)
            }
            (
                Repr::Unit { val: v1, rel: r1, unit: u1 },
                Repr::Unit { val: v2, rel: r2, unit: u2 },
            ) => {
                let rel = (*r1).min(*r2);
                let m = pow_p(self.p, rel);
                PadicNumber::from_parts(self.p, v1 + v2, rel, (u1 * u2) % &m)
            }
        }
    }

    pub fn try_inv(&self) -> Result<Self> {
        match &self.repr {
            Repr::Zero { abs } => Err(Error::precision(format!(
                "cannot invert a value indistinguishable from 0 (O(p^{abs}))"
            ))),
            Repr::Unit { val, rel, unit } => {
                let m = pow_p(self.p, *rel);
                Ok(PadicNumber::from_parts(self.p, -val, *rel, mod_inverse(unit, &m)?))
            }
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.try_inv()?))
    }

    pub fn pow_u32(&self, e: u32) -> Self {
        match &self.repr {
            Repr::Zero { abs } => {
                if e == 0 {
                    // x^0 = 1 even for an unknown x; claim a minimal precision.
                    PadicNumber::one(self.p, (*abs).max(1) as u32)
                } else {
                    PadicNumber::zero(self.p, abs * e as i64)
                }
            }
            Repr::Unit { val, rel, unit } => {
                if e == 0 {
                    return PadicNumber::one(self.p, *rel);
                }
                let m = pow_p(self.p, *rel);
                let u = unit.modpow(&BigUint::from(e), &m);
                PadicNumber::from_parts(self.p, val * e as i64, *rel, u)
            }
        }
    }

    /// Multiply by an exact power of p (negative exponents allowed).
    pub fn shift(&self, k: i64) -> Self {
        match &self.repr {
            Repr::Zero { abs } => PadicNumber::zero(self.p, abs + k),
            Repr::Unit { val, rel, unit } => {
                PadicNumber::from_parts(self.p, val + k, *rel, unit.clone())
            }
        }
    }

    /// Whether `self == other` modulo `p^k`.
    pub fn congruent_mod(&self, other: &Self, k: i64) -> bool {
        let d = self.sub(other);
        match d.repr {
            Repr::Zero { abs } => abs >= k,
            Repr::Unit { val, .. } => val >= k,
        }
    }
}

impl std::fmt::Display for PadicNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.repr {
            Repr::Zero { abs } => write!(f, "O({}^{})", self.p, abs),
            Repr::Unit { val, rel, unit } => {
                if *val == 0 {
                    write!(f, "{} + O({}^{})", unit, self.p, rel)
                } else {
                    write!(f, "{}^{} * {} + O({}^{})", self.p, val, unit, self.p, *val + *rel as i64)
                }
            }
        }
    }
}

/// Teichmüller lift: the unique `(p-1)`-st root of unity congruent to `x`
/// modulo `p`, computed by iterated p-th powering to its fixed point.
pub fn teichmuller(p: u64, x: i64, prec: u32) -> Result<PadicNumber> {
    let m = pow_p(p, prec);
    let x0 = reduce_mod(&BigInt::from(x), &m);
    if (&x0 % p).is_zero() {
        return Err(Error::domain(format!("{x} is divisible by p={p}")));
    }
    let mut y = x0;
    for _ in 0..prec {
        let next = y.modpow(&BigUint::from(p), &m);
        if next == y {
            break;
        }
        y = next;
    }
    Ok(PadicNumber::from_parts(p, 0, prec, y))
}

/// Unit root of `X^2 - aX + c` for `a` a unit and `v(c) >= 1`, by Newton
/// iteration from the seed `a mod p`. The other root `c/alpha` then has
/// valuation `v(c)`.
pub fn hensel_unit_root(a: &PadicNumber, c: &PadicNumber, prec: u32) -> Result<PadicNumber> {
    let p = a.prime();
    if a.valuation() != Some(0) {
        return Err(Error::domain("non-ordinary: a_p is not a p-adic unit"));
    }
    if matches!(c.valuation(), Some(v) if v < 1) {
        return Err(Error::domain("constant term must have valuation >= 1"));
    }
    let work = (prec as i64).min(a.abs_precision()).min(c.abs_precision());
    if work < 1 {
        return Err(Error::precision("no digits available for Hensel lifting"));
    }
    let digits = work as u32;
    let m = pow_p(p, digits);
    let a_rep = a.integer_residue(digits)?;
    let c_rep = c.integer_residue(digits)?;
    let mut x = &a_rep % &m;
    // Quadratic convergence: ceil(log2 digits) + 1 steps reach full precision.
    for _ in 0..(64 - (digits as u64).leading_zeros() + 2) {
        let fx = (&x * &x + &m * &m + &c_rep - &a_rep * &x % &m * BigUint::one()) % &m;
        let fx = (fx + &m - (&a_rep * &x) % &m) % &m; // recompute cleanly below
        let _ = fx;
        let x2 = (&x * &x) % &m;
        let ax = (&a_rep * &x) % &m;
        let f = ((&x2 + &c_rep) + (&m - ax)) % &m;
        let two_x = (BigUint::from(2u32) * &x) % &m;
        let fp = ((&two_x) + (&m - (&a_rep % &m))) % &m;
        let step = (&f * mod_inverse(&fp, &m)?) % &m;
        let next = ((&x + &m) - step) % &m;
        if next == x {
            break;
        }
        x = next;
    }
    // The root is a unit congruent to a mod p.
    let root = PadicNumber::from_parts(p, 0, digits, x);
    let check = root.mul(&root).sub(&a.mul(&root)).add(c);
    if !check.congruent_mod(&PadicNumber::zero(p, work), work) {
        return Err(Error::precision("Hensel iteration failed to converge"));
    }
    Ok(root)
}

/// `y^s` for a 1-unit `y` and integral `s`, exact modulo
/// `p^min(prec(y), prec(s)+1)`. For integer `s` this agrees with repeated
/// multiplication, and `y^(s+t) = y^s y^t` holds at the tracked precision.
pub fn one_unit_pow(y: &PadicNumber, s: &PadicNumber) -> Result<PadicNumber> {
    let p = y.prime();
    if y.valuation() != Some(0) {
        return Err(Error::domain("base must be a unit"));
    }
    let one = PadicNumber::one(p, y.rel_precision().unwrap_or(1));
    let t = y.sub(&one);
    if matches!(t.valuation(), Some(v) if v < 1) {
        return Err(Error::domain("base is not a 1-unit"));
    }
    if matches!(s.valuation(), Some(v) if v < 0) {
        return Err(Error::domain("exponent must be integral"));
    }
    // y^(p^a) = 1 mod p^(a+1), so the result depends on s only mod p^(R-1).
    let ry = y.rel_precision().unwrap_or(1) as i64;
    let r = ry.min(s.abs_precision() + 1).max(1) as u32;
    let m = pow_p(p, r);
    let y_rep = y.integer_residue(r)?;
    let s_rep = match s.valuation() {
        None => BigUint::zero(),
        Some(_) => s.integer_residue(r.saturating_sub(1).max(1))? % pow_p(p, r - 1),
    };
    Ok(PadicNumber::from_parts(p, 0, r, y_rep.modpow(&s_rep, &m)))
}

/// p-adic logarithm of a 1-unit, via the alternating series on the residue
/// representative. An isometry on 1-units for p >= 5, so the result is good
/// to the same absolute precision as the input.
pub fn log_1unit(y: &PadicNumber) -> Result<PadicNumber> {
    let p = y.prime();
    if y.valuation() != Some(0) {
        return Err(Error::domain("log requires a unit"));
    }
    let one = PadicNumber::one(p, y.rel_precision().unwrap_or(1));
    let t = y.sub(&one);
    let target = y.abs_precision();
    let tv = match t.valuation() {
        None => return Ok(PadicNumber::zero(p, target)),
        Some(v) if v >= 1 => v,
        Some(_) => return Err(Error::domain("log requires a 1-unit")),
    };
    // Terms t^n/n: valuation >= n*tv - log_p(n). Work with a guarded lift of
    // the exact residue representative.
    let mut nmax = 2u32;
    while (nmax as i64) * tv - (nmax as f64).log(p as f64).floor() as i64 <= target {
        nmax += 1;
    }
    let guard = ((nmax as f64).log(p as f64).ceil() as u32) + 2;
    let digits = (target.max(1) as u32) + guard;
    let t_lift = PadicNumber::from_bigint(
        p,
        &BigInt::from(t.integer_residue(t.abs_precision().max(1) as u32)?),
        digits,
    );
    let mut sum = PadicNumber::zero(p, target + guard as i64);
    let mut power = PadicNumber::one(p, digits);
    for n in 1..=nmax {
        power = power.mul(&t_lift);
        let term = power.div(&PadicNumber::from_i64(p, n as i64, digits))?;
        sum = if n % 2 == 1 { sum.add(&term) } else { sum.sub(&term) };
    }
    Ok(sum.reduce_abs(target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    #[test]
    fn teichmuller_fixed_point_of_one() {
        for n in 1..=8 {
            let w = teichmuller(5, 1, n).unwrap();
            assert_eq!(w.integer_residue(n).unwrap(), BigUint::one());
        }
    }

    #[test]
    fn teichmuller_of_two_mod_25() {
        // Iterating y -> y^5 from 2 stabilizes at 7 mod 25.
        let w = teichmuller(5, 2, 2).unwrap();
        assert_eq!(w.integer_residue(2).unwrap(), BigUint::from(7u32));
    }

    #[test]
    fn teichmuller_of_four_is_minus_one() {
        let w = teichmuller(5, 4, 3).unwrap();
        assert_eq!(w.integer_residue(3).unwrap(), BigUint::from(124u32));
    }

    #[test]
    fn teichmuller_rejects_multiples_of_p() {
        assert!(teichmuller(5, 10, 3).is_err());
    }

    #[test]
    fn teichmuller_root_of_unity_all_units() {
        for p in [5u64, 7, 11, 13] {
            for n in 1..=10u32 {
                for x in 1..p {
                    let w = teichmuller(p, x as i64, n).unwrap();
                    let pw = w.pow_u32((p - 1) as u32);
                    assert!(pw.congruent_mod(&PadicNumber::one(p, n), n as i64));
                    assert!(w.congruent_mod(&PadicNumber::from_i64(p, x as i64, n), 1));
                }
            }
        }
    }

    #[test]
    fn hensel_trivial_case() {
        let a = PadicNumber::from_i64(5, 1, 4);
        let c = PadicNumber::zero(5, 4);
        let alpha = hensel_unit_root(&a, &c, 4).unwrap();
        assert!(alpha.congruent_mod(&PadicNumber::one(5, 4), 4));
    }

    #[test]
    fn hensel_delta_at_eleven() {
        // Brute force all unit residues mod 121 against the quadratic.
        let p = 11u64;
        let tau = 534612i64;
        let m = 121i64;
        let c = {
            let mut c = 1i64;
            for _ in 0..11 {
                c = (c * 11) % m;
            }
            c
        };
        let mut expected = None;
        for x in 1..m {
            if x % 11 == 0 {
                continue;
            }
            if (x * x - tau % m * x % m + c).rem_euclid(m) == 0 && x % 11 == tau % 11 {
                expected = Some(x);
            }
        }
        assert_eq!(expected, Some(34));
        let a = PadicNumber::from_i64(p, tau, 2);
        let cc = PadicNumber::from_bigint(p, &BigInt::from(11u64).pow(11), 2);
        let alpha = hensel_unit_root(&a, &cc, 2).unwrap();
        assert_eq!(alpha.integer_residue(2).unwrap(), BigUint::from(34u32));
    }

    #[test]
    fn hensel_rejects_non_unit() {
        let a = PadicNumber::from_i64(5, 5, 3);
        let c = PadicNumber::from_i64(5, 25, 3);
        let err = hensel_unit_root(&a, &c, 3).unwrap_err();
        assert!(err.to_string().contains("non-ordinary"));
    }

    #[test]
    fn hensel_root_properties() {
        // alpha^2 - a*alpha + c = 0, v(alpha) = 0, v(c/alpha) = v(c).
        let p = 7u64;
        for (a0, c0) in [(3i64, 7i64), (8, 49), (-4, 14), (susceptible(), 343)] {
            let a = PadicNumber::from_i64(p, a0, 5);
            let c = PadicNumber::from_i64(p, c0, 5);
            let alpha = hensel_unit_root(&a, &c, 5).unwrap();
            assert_eq!(alpha.valuation(), Some(0));
            let beta = c.div(&alpha).unwrap();
            assert_eq!(beta.valuation(), c.valuation());
            let lhs = alpha.mul(&alpha).sub(&a.mul(&alpha)).add(&c);
            assert!(lhs.congruent_mod(&PadicNumber::zero(p, 5), 5));
        }
    }

    fn susceptible() -> i64 {
        13
    }

    #[test]
    fn one_unit_pow_trivial_and_integer() {
        let p = 5u64;
        let y = PadicNumber::from_i64(p, 6, 4);
        let one = PadicNumber::one(p, 4);
        assert!(one_unit_pow(&one, &PadicNumber::from_i64(p, 17, 4)).unwrap()
            .congruent_mod(&one, 4));
        // (1+p)^m both ways.
        for m in [0i64, 1, 2, 7, 12] {
            let s = PadicNumber::from_i64(p, m, 4);
            let via_pow = one_unit_pow(&y, &s).unwrap();
            let direct = y.pow_u32(m as u32);
            assert!(via_pow.congruent_mod(&direct, 4));
        }
    }

    #[test]
    fn one_unit_pow_recovers_wild_part_of_two() {
        // Solve 2/omega(2) = 6^s mod 125 by brute-force discrete log.
        let p = 5u64;
        let n = 3u32;
        let omega2 = teichmuller(p, 2, n).unwrap();
        let d1 = PadicNumber::from_i64(p, 2, n).div(&omega2).unwrap();
        let modulus = 125u64;
        let target: u64 = d1.integer_residue(n).unwrap().try_into().unwrap();
        let mut s_found = None;
        let mut acc = 1u64;
        for s in 0..25u64 {
            if acc == target {
                s_found = Some(s);
                break;
            }
            acc = acc * 6 % modulus;
        }
        let s = s_found.expect("discrete log exists");
        let y = PadicNumber::from_i64(p, 6, n);
        let via = one_unit_pow(&y, &PadicNumber::from_i64(p, s as i64, n)).unwrap();
        assert!(via.congruent_mod(&d1, n as i64));
    }

    #[test]
    fn one_unit_pow_additive_in_exponent() {
        let p = 5u64;
        let y = PadicNumber::from_i64(p, 31, 5);
        for (s0, t0) in [(2i64, 3i64), (11, 7), (0, 9), (24, 24)] {
            let s = PadicNumber::from_i64(p, s0, 5);
            let t = PadicNumber::from_i64(p, t0, 5);
            let st = PadicNumber::from_i64(p, s0 + t0, 5);
            let lhs = one_unit_pow(&y, &st).unwrap();
            let rhs = one_unit_pow(&y, &s).unwrap().mul(&one_unit_pow(&y, &t).unwrap());
            assert!(lhs.congruent_mod(&rhs, 5));
        }
    }

    #[test]
    fn log_is_additive() {
        let p = 7u64;
        let a = PadicNumber::from_i64(p, 8, 5);
        let b = PadicNumber::from_i64(p, 15, 5);
        let lhs = log_1unit(&a.mul(&b)).unwrap();
        let rhs = log_1unit(&a).unwrap().add(&log_1unit(&b).unwrap());
        assert!(lhs.congruent_mod(&rhs, 5));
    }

    #[test]
    fn rational_roundtrip() {
        let q = BigRational::new(BigInt::from(-31), BigInt::from(30));
        let x = PadicNumber::from_rational(5, &q, 3).unwrap();
        assert_eq!(x.valuation(), Some(-1));
        // -31/6 = 99 mod 625
        assert_eq!(x.unit_part().unwrap() % 625u32, BigUint::from(99u32) % 625u32);
    }

    proptest! {
        #[test]
        fn add_precision_is_min_rule(a in -2000i64..2000, b in -2000i64..2000) {
            let p = 5u64;
            let x = PadicNumber::from_i64(p, a, 4);
            let y = PadicNumber::from_i64(p, b, 4);
            let s = x.add(&y);
            let direct = PadicNumber::from_i64(p, a + b, 6);
            prop_assert!(s.congruent_mod(&direct, s.abs_precision()));
            prop_assert!(s.abs_precision() >= 4.min(x.abs_precision()).min(y.abs_precision()).min(4));
        }

        #[test]
        fn mul_matches_integers(a in -300i64..300, b in -300i64..300) {
            let p = 7u64;
            let x = PadicNumber::from_i64(p, a, 4);
            let y = PadicNumber::from_i64(p, b, 4);
            let m = x.mul(&y);
            let direct = PadicNumber::from_i64(p, a * b, 8);
            prop_assert!(m.congruent_mod(&direct, m.abs_precision().min(4)));
        }
    }
}
