//! Schur expansions under iterated Pieri products, and the Grassmannian
//! intersection numbers they compute.
//!
//! Multiplying by `s_(a)` adds a horizontal strip of `a` boxes, multiplying by
//! `s_(1^a)` a vertical strip. Inside `Gr(k, n)` every partition outside the
//! `k × (n-k)` box vanishes, so expansions carry an optional bounding box and
//! prune while extending. The top class of `Gr(k, n)` is the full rectangle.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::shapes::{strip_extensions, Bounds, Partition, StripKind};
use crate::tableau::factorial;

/// `s_(size)` (row) or `s_(1^size)` (column).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PieriFactor {
    pub kind: StripKind,
    pub size: usize,
}

impl PieriFactor {
    pub const fn row(size: usize) -> Self {
        PieriFactor { kind: StripKind::Horizontal, size }
    }

    pub const fn column(size: usize) -> Self {
        PieriFactor { kind: StripKind::Vertical, size }
    }
}

/// A finite nonnegative combination of Schur functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, BigUint>,
    bounds: Option<Bounds>,
}

impl SchurExpansion {
    /// The constant `1 = s_∅`.
    pub fn one(bounds: Option<Bounds>) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Partition::empty(), BigUint::one());
        SchurExpansion { terms, bounds }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, BigUint)>, bounds: Option<Bounds>) -> Self {
        let mut e = SchurExpansion { terms: BTreeMap::new(), bounds };
        for (p, c) in terms {
            e.add(p, c);
        }
        e
    }

    fn add(&mut self, p: Partition, c: BigUint) {
        if c.is_zero() || self.bounds.is_some_and(|b| !p.fits(b)) {
            return;
        }
        *self.terms.entry(p).or_default() += c;
    }

    pub fn coefficient(&self, p: &Partition) -> BigUint {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigUint> {
        &self.terms
    }

    pub fn bounds(&self) -> Option<Bounds> {
        self.bounds
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn extend_each(&self, size: Option<usize>, kind: StripKind) -> SchurExpansion {
        let limit = self.bounds.map(|b| b.rectangle());
        let max_rows = self.bounds.map_or(usize::MAX, |b| b.rows);
        let mut out = SchurExpansion { terms: BTreeMap::new(), bounds: self.bounds };
        for (lambda, c) in &self.terms {
            for nu in strip_extensions(lambda, size, limit.as_ref(), max_rows, kind) {
                out.add(nu, c.clone());
            }
        }
        out
    }

    /// `Σ_{a ≥ 0} self · s_(a)`; needs a bounding box.
    fn times_any_row(&self) -> SchurExpansion {
        assert!(self.bounds.is_some(), "unbounded sum over row sizes");
        self.extend_each(None, StripKind::Horizontal)
    }
}

/// Multiplies every term by the factor's Schur function.
pub fn multiply_pieri(e: &SchurExpansion, f: PieriFactor) -> SchurExpansion {
    e.extend_each(Some(f.size), f.kind)
}

/// `Gr(k, n)`: `k`-planes in an `n`-dimensional space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrassmannianCtx {
    pub k: usize,
    pub n: usize,
}

impl GrassmannianCtx {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::param(format!("Gr({k},{n}) needs 1 <= k <= n")));
        }
        Ok(GrassmannianCtx { k, n })
    }

    pub fn bounds(&self) -> Bounds {
        Bounds::new(self.k, self.n - self.k)
    }

    pub fn point_class(&self) -> Partition {
        self.bounds().rectangle()
    }

    pub fn one(&self) -> SchurExpansion {
        SchurExpansion::one(Some(self.bounds()))
    }

    /// Coefficient of the point class.
    pub fn integral(&self, e: &SchurExpansion) -> BigUint {
        e.coefficient(&self.point_class())
    }
}

fn check_l_params(r: usize, d: usize) -> Result<()> {
    if r == 0 || d < r {
        return Err(Error::param(format!("need r >= 1 and d >= r, got r={r}, d={d}")));
    }
    Ok(())
}

/// `s_(1^r)^g` inside `Gr(r+1, d+1)`.
fn column_power(ctx: &GrassmannianCtx, r: usize, g: usize) -> SchurExpansion {
    (0..g).fold(ctx.one(), |e, _| multiply_pieri(&e, PieriFactor::column(r)))
}

/// `∫ σ_(1^r)^g · Σ_{α_0+…+α_r = (r+1)(d-r) - rg} ∏ σ_(α_i)` over `Gr(r+1, d+1)`.
///
/// The composition sum is folded into `r+1` rounds of "multiply by a row of
/// any length"; reaching the point class forces the lengths to add up.
pub fn integral_l(g: usize, r: usize, d: usize) -> Result<BigUint> {
    check_l_params(r, d)?;
    let ctx = GrassmannianCtx::new(r + 1, d + 1)?;
    if ctx.bounds().area() < r * g {
        return Ok(BigUint::zero());
    }
    let e = (0..=r).fold(column_power(&ctx, r, g), |e, _| e.times_any_row());
    Ok(ctx.integral(&e))
}

/// [`integral_l`] summed one composition at a time.
pub fn integral_l_by_compositions(g: usize, r: usize, d: usize) -> Result<BigUint> {
    check_l_params(r, d)?;
    let ctx = GrassmannianCtx::new(r + 1, d + 1)?;
    let Some(free) = ctx.bounds().area().checked_sub(r * g) else {
        return Ok(BigUint::zero());
    };
    let base = column_power(&ctx, r, g);
    let mut total = BigUint::zero();
    for alpha in compositions(free, r + 1) {
        let e = alpha.iter().fold(base.clone(), |e, &a| multiply_pieri(&e, PieriFactor::row(a)));
        total += ctx.integral(&e);
    }
    Ok(total)
}

/// Weak compositions of `n` into `parts` parts.
pub fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            cur.push(n);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in 0..=n {
            cur.push(a);
            go(n - a, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(n, parts, &mut Vec::new(), &mut out);
    out
}

/// `∫_{Gr(2,n)} σ_1^g σ_c Σ_{i+j=t} σ_i σ_j`, zero when `t < 0`.
fn two_row_term(n: usize, g: usize, c: usize, t: isize) -> Result<BigUint> {
    if t < 0 {
        return Ok(BigUint::zero());
    }
    let t = t as usize;
    let ctx = GrassmannianCtx::new(2, n)?;
    let base = (0..g).fold(ctx.one(), |e, _| multiply_pieri(&e, PieriFactor::column(1)));
    let base = multiply_pieri(&base, PieriFactor::row(c));
    let mut total = BigUint::zero();
    for i in 0..=t {
        let e = multiply_pieri(&multiply_pieri(&base, PieriFactor::row(i)), PieriFactor::row(t - i));
        total += ctx.integral(&e);
    }
    Ok(total)
}

/// The signed two-term intersection number: the `Gr(2, d+1)` integral with
/// `σ_{k-1}` minus the `Gr(2, d)` integral with `σ_{k-2}`. Not clamped.
pub fn integral_lprime(g: usize, d: usize, k: usize) -> Result<BigInt> {
    if k < 2 || k > d || k + g > 2 * d + 1 {
        return Err(Error::param(format!("need 2 <= k <= d and k+g <= 2d+1, got g={g}, d={d}, k={k}")));
    }
    let (gi, di, ki) = (g as isize, d as isize, k as isize);
    let plus = two_row_term(d + 1, g, k - 1, 2 * di - gi - ki - 1)?;
    let minus = two_row_term(d, g, k - 2, 2 * di - gi - ki - 2)?;
    Ok(BigInt::from(plus) - BigInt::from(minus))
}

/// `g! · (1!·2!⋯r!) / (s!·(s+1)!⋯(s+r)!)` with `s = g/(r+1)`.
pub fn castelnuovo_number(g: usize, r: usize) -> Result<BigUint> {
    if r == 0 || !g.is_multiple_of(r + 1) {
        return Err(Error::param(format!("r+1 must divide g (g={g}, r={r})")));
    }
    let s = g / (r + 1);
    let num = (1..=r).fold(factorial(g), |acc, j| acc * factorial(j));
    let den = (0..=r).fold(BigUint::one(), |acc, j| acc * factorial(s + j));
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{contains, is_horizontal_strip, is_vertical_strip, partitions_in_box, SkewShape};
    use crate::tableau::count_syt_hook_length;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn big(n: u32) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn pieri_examples() {
        let one = SchurExpansion::one(Some(Bounds::new(3, 4)));
        let e = multiply_pieri(&one, PieriFactor::row(2));
        assert_eq!(e.terms().len(), 1);
        assert_eq!(e.coefficient(&p(&[2])), big(1));

        let e = SchurExpansion::from_terms([(p(&[2]), big(1))], None);
        let e = multiply_pieri(&e, PieriFactor::column(2));
        let e = multiply_pieri(&e, PieriFactor::row(3));
        assert_eq!(e.coefficient(&p(&[4, 2, 1])), big(2));

        let e = SchurExpansion::from_terms([(p(&[1]), big(1))], Some(Bounds::new(2, 2)));
        let e = multiply_pieri(&e, PieriFactor::column(1));
        assert_eq!(e, SchurExpansion::from_terms([(p(&[2]), big(1)), (p(&[1, 1]), big(1))], Some(Bounds::new(2, 2))));
    }

    /// Strip extensions by filtering every partition of the right size.
    fn brute_extensions(lambda: &Partition, f: PieriFactor, b: Bounds) -> Vec<Partition> {
        partitions_in_box(lambda.size() + f.size, b)
            .into_iter()
            .filter(|nu| contains(nu, lambda))
            .filter(|nu| {
                let s = SkewShape::new(nu.clone(), lambda.clone()).unwrap();
                match f.kind {
                    StripKind::Horizontal => is_horizontal_strip(&s),
                    StripKind::Vertical => is_vertical_strip(&s),
                }
            })
            .collect()
    }

    #[test]
    fn pieri_matches_brute_force_in_3x3() {
        let b = Bounds::new(3, 3);
        for n in 0..=9 {
            for lambda in partitions_in_box(n, b) {
                for size in 0..=3 {
                    for f in [PieriFactor::row(size), PieriFactor::column(size)] {
                        let e = multiply_pieri(&SchurExpansion::from_terms([(lambda.clone(), big(1))], Some(b)), f);
                        let want = SchurExpansion::from_terms(
                            brute_extensions(&lambda, f, b).into_iter().map(|nu| (nu, big(1))),
                            Some(b),
                        );
                        assert_eq!(e, want, "{lambda} times {f:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn row_and_column_factors_commute() {
        let b = Bounds::new(3, 3);
        for n in 0..=9 {
            for lambda in partitions_in_box(n, b) {
                let seed = SchurExpansion::from_terms([(lambda, big(1))], Some(b));
                for a in 0..=3 {
                    for c in 0..=3 {
                        let rc = multiply_pieri(&multiply_pieri(&seed, PieriFactor::row(a)), PieriFactor::column(c));
                        let cr = multiply_pieri(&multiply_pieri(&seed, PieriFactor::column(c)), PieriFactor::row(a));
                        assert_eq!(rc, cr);
                    }
                }
            }
        }
    }

    #[test]
    fn integral_l_examples() {
        assert_eq!(integral_l(0, 1, 1).unwrap(), big(1));
        assert_eq!(integral_l(2, 1, 3).unwrap(), big(4));
        assert_eq!(integral_l(2, 2, 6).unwrap(), big(9));
        // Below the dimension count nothing survives.
        assert_eq!(integral_l(4, 2, 3).unwrap(), big(0));
        assert!(integral_l(1, 0, 3).is_err());
        assert!(integral_l(1, 3, 2).is_err());
    }

    #[test]
    fn dp_agrees_with_composition_loop() {
        for g in 0..=4 {
            for r in 1..=3 {
                for d in r..=g + r + 2 {
                    assert_eq!(
                        integral_l(g, r, d).unwrap(),
                        integral_l_by_compositions(g, r, d).unwrap(),
                        "(g,r,d)=({g},{r},{d})"
                    );
                }
            }
        }
    }

    #[test]
    fn integral_lprime_examples() {
        assert_eq!(integral_lprime(3, 7, 4).unwrap(), BigInt::from(8));
        assert_eq!(integral_lprime(0, 2, 2).unwrap(), BigInt::from(1));
        // k+g = 2d+1 and k+g = 2d.
        assert_eq!(integral_lprime(3, 2, 2).unwrap(), BigInt::from(0));
        assert_eq!(integral_lprime(2, 2, 2).unwrap(), BigInt::from(0));
        assert_eq!(integral_lprime(5, 4, 4).unwrap(), BigInt::from(0));
        assert!(integral_lprime(0, 3, 1).is_err());
        assert!(integral_lprime(0, 3, 4).is_err());
        assert!(integral_lprime(6, 3, 2).is_err());
    }

    #[test]
    fn castelnuovo_examples() {
        assert_eq!(castelnuovo_number(10, 4).unwrap(), big(42));
        assert_eq!(castelnuovo_number(4, 1).unwrap(), big(2));
        assert_eq!(castelnuovo_number(3, 2).unwrap(), big(1));
        assert_eq!(castelnuovo_number(0, 2).unwrap(), big(1));
        assert!(castelnuovo_number(5, 1).is_err());
        for (g, r) in [(2, 1), (4, 1), (3, 2), (6, 2), (4, 3), (10, 4), (12, 2)] {
            let s = g / (r + 1);
            assert_eq!(castelnuovo_number(g, r).unwrap(), count_syt_hook_length(&Partition::rectangle(r + 1, s)));
        }
    }

    #[test]
    fn castelnuovo_is_the_column_power_integral() {
        // At d = r + rg/(r+1) no row factors remain.
        for (g, r) in [(2, 1), (4, 1), (3, 2), (6, 2), (4, 3), (10, 4)] {
            let d = r + r * g / (r + 1);
            assert_eq!(integral_l(g, r, d).unwrap(), castelnuovo_number(g, r).unwrap());
        }
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(3, 3).len(), 10);
        assert_eq!(compositions(0, 0), vec![Vec::<usize>::new()]);
        assert!(compositions(2, 0).is_empty());
    }
}
