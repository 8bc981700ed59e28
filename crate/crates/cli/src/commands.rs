use std::io::Read;

use anyhow::{bail, Context, Result};
use num_bigint::BigUint;

use ltab::json::{self, parse_filling, parse_grid, parse_pair, to_json, GridTableau};
use ltab::lprime::{
    binary_to_lprime, count_lprime_details, enumerate_lprime, lprime_prediction, lprime_to_binary, psi, Sign,
};
use ltab::ltab::{enumerate_l, enumerate_restricted_l, enumerate_trssyt, l_to_word, phi, phi_i, truncate, word_to_l};
use ltab::pieri::{castelnuovo_number, integral_l, integral_lprime};
use ltab::render::{filling_ascii, filling_latex, grid_ascii, grid_latex};
use ltab::rsk::{rsk_insert, rsk_inverse, RskPair, Word};
use ltab::tableau::Filling;
use ltab::verify::{self, Fault, Suite, VerifyBounds};
use ltab::RedTableau;

use crate::cli::{CountFamily, EnumFamily, FaultArg, Format, MapName, Params, SignArg, SuiteArg};
use crate::report::{CheckLine, RunReport};
use crate::UsageError;

pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

fn need(v: Option<usize>, name: &str) -> Result<usize> {
    v.ok_or_else(|| UsageError(format!("--{name} is required")).into())
}

fn render_report(report: &RunReport, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(report)? + "\n"),
        Format::Ascii => Ok(report.to_text()),
        Format::Latex => Err(UsageError("latex output applies to tableaux, not reports".into()).into()),
    }
}

fn pow(base: usize, e: usize) -> BigUint {
    BigUint::from(base).pow(e as u32)
}

pub fn count(family: CountFamily, p: Params) -> Result<RunReport> {
    let mut report = RunReport::new(format!("count {}", family_name(family)));
    match family {
        CountFamily::L => {
            let (g, r, d) = (need(p.g, "g")?, need(p.r, "r")?, need(p.d, "d")?);
            if r == 0 {
                bail!(UsageError("--r must be at least 1".into()));
            }
            report.params.extend([("g", g), ("r", r), ("d", d)]);
            let n = enumerate_l(g, r, d).len();
            report.count("count", n);
            if d >= g + r {
                let pred = pow(r + 1, g);
                report.count("prediction", &pred);
                report.check("matches (r+1)^g", BigUint::from(n) == pred, format!("{n} vs {pred}"));
            }
        }
        CountFamily::Lprime => {
            let (g, d, k) = (need(p.g, "g")?, need(p.d, "d")?, need(p.k, "k")?);
            report.params.extend([("g", g), ("d", d), ("k", k)]);
            let c = count_lprime_details(g, d, k)?;
            let diff = c.difference();
            report.count("count", &diff);
            report.count("positive", c.positive);
            report.count("negative", c.negative);
            report.count("reduced", c.reduced);
            if let Some(i) = &c.integral {
                report.count("integral", i);
            }
            let agree = diff == c.reduced.into() && c.integral.as_ref().is_none_or(|i| *i == diff);
            report.check("counting routes agree", agree, format!("difference {diff}, reduced {}", c.reduced));
            if d >= g + k {
                let pred = lprime_prediction(g);
                report.count("prediction", &pred);
                report.check("matches 2^g", diff == pred, format!("{diff} vs {pred}"));
            }
        }
        CountFamily::Restricted => {
            let (g, r, i) = (need(p.g, "g")?, need(p.r, "r")?, need(p.i, "i")?);
            report.params.extend([("g", g), ("r", r), ("i", i)]);
            let n = enumerate_restricted_l(g, r, i)?.len();
            let pred = pow(r - i + 1, g);
            report.count("count", n);
            report.count("prediction", &pred);
            report.check("matches (r-i+1)^g", BigUint::from(n) == pred, format!("{n} vs {pred}"));
        }
        CountFamily::Castelnuovo => {
            let (g, r) = (need(p.g, "g")?, need(p.r, "r")?);
            report.params.extend([("g", g), ("r", r)]);
            report.count("count", castelnuovo_number(g, r)?);
        }
        CountFamily::IntegralL => {
            let (g, r, d) = (need(p.g, "g")?, need(p.r, "r")?, need(p.d, "d")?);
            report.params.extend([("g", g), ("r", r), ("d", d)]);
            report.count("count", integral_l(g, r, d)?);
        }
        CountFamily::IntegralLprime => {
            let (g, d, k) = (need(p.g, "g")?, need(p.d, "d")?, need(p.k, "k")?);
            report.params.extend([("g", g), ("d", d), ("k", k)]);
            report.count("count", integral_lprime(g, d, k)?);
        }
    }
    Ok(report)
}

fn family_name(f: CountFamily) -> &'static str {
    match f {
        CountFamily::L => "l",
        CountFamily::Lprime => "lprime",
        CountFamily::Restricted => "restricted",
        CountFamily::Castelnuovo => "castelnuovo",
        CountFamily::IntegralL => "integral-l",
        CountFamily::IntegralLprime => "integral-lprime",
    }
}

pub fn finish_report(report: RunReport, format: Format) -> Result<Outcome> {
    let ok = report.passed();
    Ok(Outcome { text: render_report(&report, format)?, ok })
}

fn render_grid(t: &GridTableau, format: Format) -> String {
    match format {
        Format::Json => to_json(t) + "\n",
        Format::Ascii => grid_ascii(t.grid()),
        Format::Latex => grid_latex(t.grid()),
    }
}

fn render_filling(f: &Filling, format: Format) -> String {
    match format {
        Format::Json => to_json(f) + "\n",
        Format::Ascii => filling_ascii(f),
        Format::Latex => filling_latex(f),
    }
}

fn render_word(w: &Word, format: Format) -> String {
    match format {
        Format::Json => to_json(w) + "\n",
        Format::Ascii | Format::Latex => {
            let letters: Vec<String> = w.letters().iter().map(u32::to_string).collect();
            letters.join(",") + "\n"
        }
    }
}

fn render_pair(pair: &RskPair, format: Format) -> String {
    match format {
        Format::Json => to_json(pair) + "\n",
        _ => format!("P:\n{}Q:\n{}", render_filling(&pair.p, format), render_filling(&pair.q, format)),
    }
}

/// Records joined so that ascii and latex output separates them by a blank line.
fn join_records(records: impl Iterator<Item = String>, format: Format) -> String {
    let sep = if format == Format::Json { "" } else { "\n" };
    records.collect::<Vec<_>>().join(sep)
}

pub fn enumerate(
    family: EnumFamily,
    p: Params,
    sign: Option<SignArg>,
    limit: Option<usize>,
    format: Format,
) -> Result<String> {
    let limit = limit.unwrap_or(usize::MAX);
    let text = match family {
        EnumFamily::L => {
            let (g, r, d) = (need(p.g, "g")?, need(p.r, "r")?, need(p.d, "d")?);
            if r == 0 {
                bail!(UsageError("--r must be at least 1".into()));
            }
            let all = enumerate_l(g, r, d);
            join_records(all.into_iter().take(limit).map(|t| render_grid(&GridTableau::L(t), format)), format)
        }
        EnumFamily::Restricted => {
            let (g, r, i) = (need(p.g, "g")?, need(p.r, "r")?, need(p.i, "i")?);
            let all = enumerate_restricted_l(g, r, i)?;
            let records =
                all.into_iter().take(limit).map(|t| render_grid(&GridTableau::Restricted { tableau: t, i }, format));
            join_records(records, format)
        }
        EnumFamily::Lprime => {
            let (g, d, k) = (need(p.g, "g")?, need(p.d, "d")?, need(p.k, "k")?);
            let sign = match sign.ok_or_else(|| UsageError("--sign is required for lprime".into()))? {
                SignArg::Positive => Sign::Positive,
                SignArg::Negative => Sign::Negative,
            };
            let all = enumerate_lprime(g, d, k, sign)?;
            join_records(all.into_iter().take(limit).map(|t| render_grid(&GridTableau::LPrime(t), format)), format)
        }
        EnumFamily::Trssyt => {
            let (g, r, i) = (need(p.g, "g")?, need(p.r, "r")?, need(p.i, "i")?);
            let all = enumerate_trssyt(g, r, i);
            join_records(all.iter().take(limit).map(|t| render_filling(t.filling(), format)), format)
        }
    };
    Ok(text)
}

fn read_input(input: Option<&str>) -> Result<String> {
    match input {
        None => Err(UsageError("this map needs an input (file, `-` or inline JSON)".into()).into()),
        Some("-") => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
            Ok(s)
        }
        Some(s) if s.trim_start().starts_with('{') => Ok(s.to_string()),
        Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {path}")),
    }
}

fn word_input(input: Option<&str>, letters: Option<Vec<u32>>, r: Option<usize>) -> Result<Word> {
    match letters {
        Some(letters) => {
            let r = need(r, "r")?;
            Ok(Word::new(letters, r as u32)?)
        }
        None => Ok(json::from_json(&read_input(input)?)?),
    }
}

pub fn map(name: MapName, input: Option<&str>, letters: Option<Vec<u32>>, p: Params, format: Format) -> Result<String> {
    let out = match name {
        MapName::LToWord => match parse_grid(&read_input(input)?)? {
            GridTableau::L(t) | GridTableau::Restricted { tableau: t, .. } => render_word(&l_to_word(&t)?, format),
            GridTableau::LPrime(_) => bail!(UsageError("l-to-word takes an L-tableau".into())),
        },
        MapName::WordToL => render_grid(&GridTableau::L(word_to_l(&word_input(input, letters, p.r)?)?), format),
        MapName::Truncate => match parse_grid(&read_input(input)?)? {
            GridTableau::L(t) => render_grid(&GridTableau::L(truncate(&t)?), format),
            _ => bail!(UsageError("truncate takes an L-tableau".into())),
        },
        MapName::Phi | MapName::PhiI => {
            let f = parse_filling(&read_input(input)?)?;
            let r = need(p.r, "r")?;
            let g = p.g.unwrap_or_else(|| f.max_entry().unwrap_or(0) as usize);
            let i = match (name, p.i) {
                (MapName::Phi, _) => r,
                (_, Some(i)) => i,
                (_, None) if g > 0 => f.size() / g,
                _ => bail!(UsageError("--i is required when the tableau is empty".into())),
            };
            let red = RedTableau::new(f, g, r, i)?;
            if name == MapName::Phi {
                render_filling(phi(&red)?.filling(), format)
            } else {
                render_filling(phi_i(&red)?.filling(), format)
            }
        }
        MapName::Psi => match parse_grid(&read_input(input)?)? {
            GridTableau::LPrime(t) => render_grid(&GridTableau::LPrime(psi(&t)?), format),
            _ => bail!(UsageError("psi takes a negative L'-tableau".into())),
        },
        MapName::Rsk => render_pair(&rsk_insert(&word_input(input, letters, p.r)?), format),
        MapName::RskInverse => {
            let pair = parse_pair(&read_input(input)?)?;
            let r = match p.r {
                Some(r) => r as u32,
                None => pair.p.max_entry().unwrap_or(0),
            };
            render_word(&rsk_inverse(&pair, r)?, format)
        }
        MapName::LprimeToBinary => match parse_grid(&read_input(input)?)? {
            GridTableau::LPrime(t) => render_word(&lprime_to_binary(&t)?, format),
            _ => bail!(UsageError("lprime-to-binary takes an L'-tableau".into())),
        },
        MapName::BinaryToLprime => {
            let w = match letters {
                Some(l) => Word::new(l, 1)?,
                None => json::from_json(&read_input(input)?)?,
            };
            let (d, k) = (need(p.d, "d")?, need(p.k, "k")?);
            render_grid(&GridTableau::LPrime(binary_to_lprime(&w, d, k)?), format)
        }
    };
    Ok(out)
}

pub fn verify(suite: SuiteArg, bounds: VerifyBounds, fault: Option<FaultArg>) -> Result<RunReport> {
    if bounds.r_max == 0 || bounds.k_max < 2 {
        bail!(UsageError("need --r-max >= 1 and --k-max >= 2".into()));
    }
    let suite = match suite {
        SuiteArg::Counts => Suite::Counts,
        SuiteArg::Bijections => Suite::Bijections,
        SuiteArg::Oracles => Suite::Oracles,
        SuiteArg::All => Suite::All,
    };
    let fault = match fault {
        None => Fault::None,
        Some(FaultArg::CorruptWord) => Fault::CorruptWord,
        Some(FaultArg::DropTableau) => Fault::DropTableau,
    };
    let result = verify::run(suite, bounds, fault);
    let mut report = RunReport::new(format!("verify {}", suite_name(suite)));
    report.params.extend([
        ("g_max", bounds.g_max),
        ("r_max", bounds.r_max),
        ("d_slack", bounds.d_slack),
        ("k_max", bounds.k_max),
    ]);
    let mut cases = 0;
    for c in result.checks {
        cases += c.cases;
        report.checks.push(CheckLine {
            name: c.name.to_string(),
            passed: c.passed,
            detail: c.detail,
            counterexample: c.counterexample,
        });
    }
    report.count("cases", cases);
    Ok(report)
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Counts => "counts",
        Suite::Bijections => "bijections",
        Suite::Oracles => "oracles",
        Suite::All => "all",
    }
}
