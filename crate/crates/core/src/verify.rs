//! Cross-checks over a bounded parameter box: closed-form counts, oracle
//! agreement and bijection round trips. Each failing check carries the first
//! counterexample found, parameters ascending.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use serde::Serialize;
use serde_json::Value;

use crate::lprime::{
    binary_to_lprime, count_lprime, count_lprime_details, enumerate_lprime, is_psi_image, lprime_to_binary, psi, Sign,
};
use crate::ltab::{
    enumerate_l, enumerate_restricted_l, enumerate_trssyt, l_to_word, pad_to, phi, phi_i, phi_inverse,
    strip_bottom_rows, truncate, word_to_l, RedTableau,
};
use crate::pieri::{castelnuovo_number, integral_l};
use crate::rsk::{rsk_insert, rsk_inverse, Word};
use crate::shapes::{Bounds, BoxCoord, Partition, SkewShape};
use crate::tableau::{count_syt_hook_length, enumerate_fillings, FillingKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Counts,
    Bijections,
    Oracles,
    All,
}

impl Suite {
    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyBounds {
    pub g_max: usize,
    pub r_max: usize,
    pub d_slack: usize,
    pub k_max: usize,
}

impl Default for VerifyBounds {
    fn default() -> Self {
        VerifyBounds { g_max: 3, r_max: 2, d_slack: 2, k_max: 4 }
    }
}

/// Deliberate defects, for checking that the suites notice them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Fault {
    #[default]
    None,
    /// Shifts the first letter of every word produced from an L-tableau.
    CorruptWord,
    /// Drops the last L-tableau of every enumeration.
    DropTableau,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

struct Failure {
    detail: String,
    counterexample: Option<Value>,
}

fn fail(detail: impl Into<String>) -> Failure {
    Failure { detail: detail.into(), counterexample: None }
}

fn fail_with<T: Serialize>(detail: impl Into<String>, witness: &T) -> Failure {
    Failure { detail: detail.into(), counterexample: serde_json::to_value(witness).ok() }
}

fn run_check<I: IntoIterator>(
    name: &'static str,
    cases: I,
    mut body: impl FnMut(I::Item) -> Result<(), Failure>,
) -> Check {
    let mut n = 0;
    for case in cases {
        n += 1;
        if let Err(f) = body(case) {
            return Check { name, passed: false, cases: n, detail: f.detail, counterexample: f.counterexample };
        }
    }
    Check { name, passed: true, cases: n, detail: format!("{n} cases"), counterexample: None }
}

struct Ctx {
    b: VerifyBounds,
    fault: Fault,
}

impl Ctx {
    fn enumerate_l(&self, g: usize, r: usize, d: usize) -> Vec<crate::ltab::LTableau> {
        let mut all = enumerate_l(g, r, d);
        if self.fault == Fault::DropTableau {
            all.pop();
        }
        all
    }

    fn l_to_word(&self, t: &crate::ltab::LTableau) -> crate::error::Result<Word> {
        let w = l_to_word(t)?;
        if self.fault == Fault::CorruptWord && !w.is_empty() {
            let mut letters = w.letters().to_vec();
            letters[0] = (letters[0] + 1) % (w.r() + 1);
            return Word::new(letters, w.r());
        }
        Ok(w)
    }

    fn gr(&self) -> Vec<(usize, usize)> {
        (0..=self.b.g_max).flat_map(|g| (1..=self.b.r_max).map(move |r| (g, r))).collect()
    }

    fn grd(&self) -> Vec<(usize, usize, usize)> {
        let s = self.b.d_slack;
        self.gr().into_iter().flat_map(|(g, r)| (g + r..=g + r + s).map(move |d| (g, r, d))).collect()
    }

    fn gdk(&self, low: impl Fn(usize, usize) -> usize) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for g in 0..=self.b.g_max {
            for k in 2..=self.b.k_max {
                for d in low(g, k).max(k)..=g + k + self.b.d_slack {
                    out.push((g, d, k));
                }
            }
        }
        out
    }
}

fn pow(base: usize, e: usize) -> BigUint {
    BigUint::from(base).pow(e as u32)
}

pub fn run(suite: Suite, bounds: VerifyBounds, fault: Fault) -> Report {
    let cx = Ctx { b: bounds, fault };
    let mut checks = Vec::new();
    if suite.includes(Suite::Counts) {
        checks.extend(counts(&cx));
    }
    if suite.includes(Suite::Oracles) {
        checks.extend(oracles(&cx));
    }
    if suite.includes(Suite::Bijections) {
        checks.extend(bijections(&cx));
    }
    Report { checks }
}

fn counts(cx: &Ctx) -> Vec<Check> {
    let mut out = Vec::new();
    out.push(run_check("l count equals (r+1)^g", cx.grd(), |(g, r, d)| {
        let n = cx.enumerate_l(g, r, d).len();
        if BigUint::from(n) != pow(r + 1, g) {
            return Err(fail(format!("(g,r,d)=({g},{r},{d}): {n} tableaux, expected {}", pow(r + 1, g))));
        }
        Ok(())
    }));
    out.push(run_check("truncation matches enumeration at d = g+r", cx.grd(), |(g, r, d)| {
        let base: BTreeSet<_> = cx.enumerate_l(g, r, g + r).into_iter().collect();
        let all = cx.enumerate_l(g, r, d);
        let mut image = BTreeSet::new();
        for t in &all {
            let short = truncate(t).map_err(|e| fail_with(format!("({g},{r},{d}): {e}"), t))?;
            if pad_to(&short, d).as_ref() != Ok(t) {
                return Err(fail_with(format!("({g},{r},{d}): padding does not undo truncation"), t));
            }
            image.insert(short);
        }
        if image != base || all.len() != base.len() {
            return Err(fail(format!("({g},{r},{d}): truncated set differs from the d = g+r set")));
        }
        Ok(())
    }));
    let gri: Vec<_> = cx.gr().into_iter().flat_map(|(g, r)| (0..=r).map(move |i| (g, r, i))).collect();
    out.push(run_check("restricted count equals (r-i+1)^g", gri, |(g, r, i)| {
        let n = enumerate_restricted_l(g, r, i).map_err(|e| fail(e.to_string()))?.len();
        if BigUint::from(n) != pow(r - i + 1, g) {
            return Err(fail(format!("(g,r,i)=({g},{r},{i}): {n}, expected {}", pow(r - i + 1, g))));
        }
        Ok(())
    }));
    out.push(run_check("lprime count equals 2^g", cx.gdk(|g, k| g + k), |(g, d, k)| {
        let c = count_lprime(g, d, k).map_err(|e| fail(e.to_string()))?;
        if c != BigInt::from(1) << g {
            return Err(fail(format!("(g,d,k)=({g},{d},{k}): {c}, expected {}", 1u64 << g)));
        }
        Ok(())
    }));
    let vanishing: Vec<_> =
        cx.gdk(|_, _| 0).into_iter().filter(|&(g, d, k)| k + g == 2 * d || k + g == 2 * d + 1).collect();
    out.push(run_check("lprime vanishes when k+g is 2d or 2d+1", vanishing, |(g, d, k)| {
        let c = count_lprime(g, d, k).map_err(|e| fail(e.to_string()))?;
        if c != BigInt::from(0) {
            return Err(fail(format!("(g,d,k)=({g},{d},{k}): {c}")));
        }
        Ok(())
    }));
    let castel: Vec<_> = cx.gr().into_iter().filter(|&(g, r)| g > 0 && g % (r + 1) == 0).collect();
    out.push(run_check("castelnuovo matches hook lengths", castel, |(g, r)| {
        let c = castelnuovo_number(g, r).map_err(|e| fail(e.to_string()))?;
        let hooks = count_syt_hook_length(&Partition::rectangle(r + 1, g / (r + 1)));
        if c != hooks {
            return Err(fail(format!("(g,r)=({g},{r}): formula {c}, hooks {hooks}")));
        }
        Ok(())
    }));
    out
}

fn oracles(cx: &Ctx) -> Vec<Check> {
    let mut out = Vec::new();
    let cases: Vec<_> =
        cx.gr().into_iter().flat_map(|(g, r)| (r..=g + r + cx.b.d_slack).map(move |d| (g, r, d))).collect();
    out.push(run_check("l count equals the Schubert integral", cases, |(g, r, d)| {
        let n = cx.enumerate_l(g, r, d).len();
        let i = integral_l(g, r, d).map_err(|e| fail(e.to_string()))?;
        if BigUint::from(n) != i {
            return Err(fail(format!("(g,r,d)=({g},{r},{d}): {n} tableaux, integral {i}")));
        }
        Ok(())
    }));
    out.push(run_check("lprime counting routes agree", cx.gdk(|g, k| (g + k).saturating_sub(3)), |(g, d, k)| {
        let c = count_lprime_details(g, d, k).map_err(|e| fail(e.to_string()))?;
        let diff = c.difference();
        if diff != BigInt::from(c.reduced) || c.integral.as_ref().is_some_and(|i| *i != diff) {
            return Err(fail_with(format!("(g,d,k)=({g},{d},{k})"), &c));
        }
        Ok(())
    }));
    let castel: Vec<_> = cx.gr().into_iter().filter(|&(g, r)| g > 0 && g % (r + 1) == 0).collect();
    out.push(run_check("castelnuovo equals rectangle TrSSYT count", castel, |(g, r)| {
        let rect = Partition::rectangle(r + 1, r * g / (r + 1));
        let n =
            enumerate_fillings(&SkewShape::straight(rect), FillingKind::Transposed, 1..=g as u32, Some(&vec![r; g]))
                .len();
        let c = castelnuovo_number(g, r).map_err(|e| fail(e.to_string()))?;
        if BigUint::from(n) != c {
            return Err(fail(format!("(g,r)=({g},{r}): {n} fillings, formula {c}")));
        }
        Ok(())
    }));
    out
}

/// Red and other cells partition the rectangle.
fn complementary(red: &RedTableau, other: &[(BoxCoord, u32)]) -> bool {
    let rect = Bounds::new(red.r() + 1, red.g());
    let a: BTreeSet<BoxCoord> = red.filling().entries().map(|(b, _)| b).collect();
    let b: BTreeSet<BoxCoord> = other.iter().map(|&(b, _)| b).collect();
    a.is_disjoint(&b)
        && a.len() + b.len() == rect.area()
        && a.iter().chain(&b).all(|c| c.row <= rect.rows && c.col <= rect.cols)
}

fn bijections(cx: &Ctx) -> Vec<Check> {
    let mut out = Vec::new();
    let gr = cx.gr();
    out.push(run_check("l_to_word is a bijection onto words", gr.clone(), |(g, r)| {
        let mut seen = BTreeSet::new();
        for t in cx.enumerate_l(g, r, g + r) {
            let w = cx.l_to_word(&t).map_err(|e| fail_with(e.to_string(), &t))?;
            match word_to_l(&w) {
                Ok(back) if back == t => {}
                _ => return Err(fail_with(format!("(g,r)=({g},{r}): word_to_l(l_to_word(T)) != T"), &t)),
            }
            seen.insert(w);
        }
        if BigUint::from(seen.len()) != pow(r + 1, g) {
            return Err(fail(format!("(g,r)=({g},{r}): image has {} words", seen.len())));
        }
        Ok(())
    }));
    out.push(run_check("phi is a complementary bijection", gr.clone(), |(g, r)| {
        let mut images = BTreeSet::new();
        for red in enumerate_trssyt(g, r, r) {
            let purple = phi(&red).map_err(|e| fail_with(e.to_string(), red.filling()))?;
            if !complementary(&red, &purple.filling().placed_cells()) {
                return Err(fail_with("shapes are not complementary", red.filling()));
            }
            if phi_inverse(&purple).as_ref() != Ok(&red) {
                return Err(fail_with("phi_inverse does not undo phi", red.filling()));
            }
            images.insert(purple.filling().clone());
        }
        let syt = crate::tableau::count_syt_hook_length;
        let expected: BigUint = crate::shapes::partitions_in_box(g, Bounds::new(r + 1, g)).iter().map(syt).sum();
        if BigUint::from(images.len()) != expected {
            return Err(fail(format!("(g,r)=({g},{r}): {} images, {expected} rotated SYT", images.len())));
        }
        Ok(())
    }));
    let gri: Vec<_> = gr.iter().flat_map(|&(g, r)| (1..=r).map(move |i| (g, r, i))).collect();
    out.push(run_check("phi_i is a complementary bijection", gri.clone(), |(g, r, i)| {
        let src = enumerate_trssyt(g, r, i);
        let target: BTreeSet<_> = enumerate_trssyt(g, r, r + 1 - i).into_iter().map(|t| t.filling().clone()).collect();
        let mut image = BTreeSet::new();
        for red in &src {
            let out = phi_i(red).map_err(|e| fail_with(e.to_string(), red.filling()))?;
            let placed = crate::tableau::rotate180(out.filling(), Bounds::new(r + 1, g))
                .map_err(|e| fail_with(e.to_string(), red.filling()))?
                .placed_cells();
            if !complementary(red, &placed) {
                return Err(fail_with("shapes are not complementary", red.filling()));
            }
            if phi_i(&out).as_ref() != Ok(red) {
                return Err(fail_with("phi_(r+1-i) does not undo phi_i", red.filling()));
            }
            image.insert(out.filling().clone());
        }
        if image.len() != src.len() || image != target {
            return Err(fail(format!("(g,r,i)=({g},{r},{i}): image is not all of TrSSYT(g,r,r+1-i)")));
        }
        Ok(())
    }));
    let gri0: Vec<_> = gr.iter().flat_map(|&(g, r)| (0..=r).map(move |i| (g, r, i))).collect();
    out.push(run_check("strip_bottom_rows is a bijection", gri0, |(g, r, i)| {
        let src = enumerate_restricted_l(g, r, i).map_err(|e| fail(e.to_string()))?;
        let target: BTreeSet<_> = enumerate_l(g, r - i, g + r - i).into_iter().collect();
        let mut image = BTreeSet::new();
        for t in &src {
            image.insert(strip_bottom_rows(t, i).map_err(|e| fail_with(e.to_string(), t))?);
        }
        if image.len() != src.len() || image != target {
            return Err(fail(format!("(g,r,i)=({g},{r},{i}): image is not all L-tableaux of height r-i+1")));
        }
        Ok(())
    }));
    out.push(run_check(
        "psi is injective onto positives with a bottom blue 1",
        cx.gdk(|g, k| (g + k).saturating_sub(3)),
        |(g, d, k)| {
            let neg = enumerate_lprime(g, d, k, Sign::Negative).map_err(|e| fail(e.to_string()))?;
            let pos = enumerate_lprime(g, d, k, Sign::Positive).map_err(|e| fail(e.to_string()))?;
            let mut image = BTreeSet::new();
            for t in &neg {
                let p = psi(t).map_err(|e| fail_with(e.to_string(), t))?;
                image.insert(p);
            }
            let marked: BTreeSet<_> = pos.into_iter().filter(is_psi_image).collect();
            if image.len() != neg.len() || image != marked {
                return Err(fail(format!("(g,d,k)=({g},{d},{k}): psi image differs from the marked positives")));
            }
            Ok(())
        },
    ));
    out.push(run_check("lprime binary map is a bijection", cx.gdk(|g, k| g + k), |(g, d, k)| {
        for w in Word::all(1, g) {
            let t = binary_to_lprime(&w, d, k).map_err(|e| fail_with(e.to_string(), &w))?;
            if lprime_to_binary(&t).as_ref() != Ok(&w) {
                return Err(fail_with(format!("(g,d,k)=({g},{d},{k}): round trip fails"), &t));
            }
        }
        let reduced = enumerate_lprime(g, d, k, Sign::Positive).map_err(|e| fail(e.to_string()))?;
        let words: BTreeSet<_> = reduced
            .iter()
            .filter(|t| !is_psi_image(t))
            .map(|t| lprime_to_binary(t).map_err(|e| fail_with(e.to_string(), t)))
            .collect::<Result<_, _>>()?;
        if words.len() != 1 << g {
            return Err(fail(format!("(g,d,k)=({g},{d},{k}): {} distinct words", words.len())));
        }
        Ok(())
    }));
    out.push(run_check("rsk round trip", gr, |(n, r)| {
        let mut pairs = BTreeSet::new();
        for w in Word::all(r as u32, n) {
            let pair = rsk_insert(&w);
            if pair.p.shape().outer().len() > r + 1 {
                return Err(fail_with("insertion tableau taller than r+1", &w));
            }
            if rsk_inverse(&pair, r as u32).as_ref() != Ok(&w) {
                return Err(fail_with("inverse does not recover the word", &w));
            }
            pairs.insert(crate::json::to_json(&pair));
        }
        if BigUint::from(pairs.len()) != pow(r + 1, n) {
            return Err(fail(format!("(n,r)=({n},{r}): {} distinct pairs", pairs.len())));
        }
        Ok(())
    }));
    out
}
