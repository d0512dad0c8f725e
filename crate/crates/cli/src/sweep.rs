//! Cross-check suites and value tables over parameter ranges.

use std::ops::RangeInclusive;

use lincount_core::cps::{cps_degree, recursion_check, CpsProblem};
use lincount_core::schubert::{sigma1r_power_table, special_sum, BoxShape, Partition};
use lincount_core::tableaux::count_fillings;
use lincount_core::tevelev::{
    castelnuovo, classify, degeneration_sum, r1_closed_forms, ramified_integral, ramified_large_d, tevelev_integral,
    tevelev_integral_for, tevelev_large_d, RamifiedProblem, Regime,
};
use lincount_core::{BigInt, Error};
use serde::{Deserialize, Serialize};

use crate::args::{Caps, Format, Suite, TableKind};
use crate::error::CliError;
use crate::report::{csv_table, markdown_table, plain_table, to_json, Check, Method, Report};

pub const DEFAULT_MAX_G: u32 = 16;
pub const DEFAULT_MAX_R: u32 = 4;

/// Marker for parameters where the question is malformed.
const NOT_BALANCED: &str = "—";

#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub max_g: u32,
    pub max_r: u32,
}

impl Limits {
    pub fn from_caps(caps: &Caps) -> Self {
        Limits { max_g: caps.max_g.unwrap_or(DEFAULT_MAX_G), max_r: caps.max_r.unwrap_or(DEFAULT_MAX_R) }
    }

    pub fn check_g(&self, g: u32) -> Result<(), CliError> {
        if g > self.max_g {
            return Err(CliError::CapExceeded { name: "g", value: g, cap: self.max_g, flag: "g", env: "G" });
        }
        Ok(())
    }

    pub fn check_r(&self, r: u32) -> Result<(), CliError> {
        if r > self.max_r {
            return Err(CliError::CapExceeded { name: "r", value: r, cap: self.max_r, flag: "r", env: "R" });
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Cross-checks

/// Bounds for one suite: the explicit `--max-*` values or the suite's own
/// defaults.
struct Bounds {
    g: u32,
    r: u32,
}

fn bounds(caps: &Caps, default_g: u32, default_r: u32) -> Bounds {
    Bounds { g: caps.max_g.unwrap_or(default_g), r: caps.max_r.unwrap_or(default_r) }
}

fn r1_suite(caps: &Caps, out: &mut Vec<Check>) -> Result<(), CliError> {
    let b = bounds(caps, 14, 1);
    for g in 1..=b.g {
        for d in (g + 3) / 2..=g + 4 {
            let forms = r1_closed_forms(g, d)?;
            let integral = tevelev_integral_for(g, 1, d)?.value;
            let name = |what: &str| format!("r1 g={g} d={d} {what}");
            out.push(Check::equal(name("pairing sum"), &forms.sum_form, &integral));
            out.push(Check::equal(name("binomial form"), &forms.binomial_form, &integral));
            out.push(Check::equal(name("difference form"), &forms.cps_form, &integral));
        }
    }
    Ok(())
}

fn large_d_suite(caps: &Caps, out: &mut Vec<Check>) -> Result<(), CliError> {
    let b = bounds(caps, 6, 3);
    for r in 1..=b.r {
        for g in 0..=b.g {
            for d in r * g + r..=r * g + r + 2 {
                let p = match classify(g, r, d) {
                    Ok(p) => p,
                    Err(Error::NotBalanced { .. }) => continue,
                    Err(e) => return Err(e.into()),
                };
                let closed = tevelev_large_d(&p)?;
                let name = |what: &str| format!("large-d g={g} r={r} d={d} {what}");
                out.push(Check::equal(name("integral"), tevelev_integral(&p).value, &closed));
                out.push(Check::equal(name("degeneration sum"), degeneration_sum(&p)?, &closed));
            }
        }
    }
    Ok(())
}

fn tableaux_suite(caps: &Caps, out: &mut Vec<Check>) -> Result<(), CliError> {
    let b = bounds(caps, 6, 3);
    for r in 1..=b.r {
        for g in 0..=b.g {
            for d in r + 1..=g + r + 2 {
                let count = match count_fillings(g, r, d) {
                    Ok(c) => c,
                    Err(Error::GridTooSmall { .. }) => continue,
                    Err(e) => return Err(e.into()),
                };
                let shape = BoxShape::for_grassmannian(r, d)?;
                let total = i64::from(shape.dimension()) - i64::from(r * g);
                let integral = sigma1r_power_table(g, shape).pairing(&special_sum(total, shape))?;
                out.push(Check::equal(format!("tableaux g={g} r={r} d={d}"), count, integral));
            }
        }
    }
    Ok(())
}

fn cps_suite(caps: &Caps, out: &mut Vec<Check>) -> Result<(), CliError> {
    let b = bounds(caps, 10, 1);
    for g in 0..=b.g {
        for d in 1..=g + 3 {
            for k in 1..=d {
                let Ok(p) = CpsProblem::new(g, d, k) else { continue };
                if g >= 1 {
                    let (lhs, rhs) = recursion_check(g, d, k)?;
                    out.push(Check::equal(format!("cps g={g} d={d} k={k} recursion"), lhs, rhs));
                }
                if k == 1 {
                    let t = tevelev_integral_for(g, 1, d)?.value;
                    out.push(Check::equal(format!("cps g={g} d={d} k=1 equals L"), cps_degree(&p), t));
                }
                if p.n >= i64::from(d + k + 1) {
                    let stable = BigInt::from(2u32).pow(g);
                    out.push(Check::equal(format!("cps g={g} d={d} k={k} stable"), cps_degree(&p), stable));
                }
            }
        }
    }
    Ok(())
}

fn ramified_suite(caps: &Caps, out: &mut Vec<Check>) -> Result<(), CliError> {
    let b = bounds(caps, 4, 2);
    for r in 1..=b.r {
        for g in 0..=b.g {
            for d in 1..=r * g + r + 2 {
                let Ok(p) = classify(g, r, d) else { continue };
                let rp = RamifiedProblem::new(g, r, d, Vec::new())?;
                let name = format!("ramified g={g} r={r} d={d} m=0");
                out.push(Check::equal(name, ramified_integral(&rp)?.value, tevelev_integral(&p).value));
            }
        }
        let lams: Vec<Partition> =
            (1..=3).flat_map(|size| BoxShape { rows: r, cols: size }.partitions_of(size)).collect();
        let mut lists: Vec<Vec<Partition>> = lams.iter().map(|l| vec![l.clone()]).collect();
        for (i, a) in lams.iter().enumerate() {
            for c in &lams[i..] {
                lists.push(vec![a.clone(), c.clone()]);
            }
        }
        for g in 0..=b.g {
            for ram in &lists {
                let tot: u32 = ram.iter().map(Partition::size).sum();
                for d in r * g + r + tot..=r * g + r + tot + 2 {
                    let rp = match RamifiedProblem::new(g, r, d, ram.clone()) {
                        Ok(rp) => rp,
                        Err(Error::NotBalanced { .. }) => continue,
                        Err(e) => return Err(e.into()),
                    };
                    let echo = ram.iter().map(|l| format!("[{l}]")).collect::<String>();
                    let name = format!("ramified g={g} r={r} d={d} {echo}");
                    out.push(Check::equal(name, ramified_large_d(&rp)?, ramified_integral(&rp)?.value));
                }
            }
        }
    }
    Ok(())
}

fn castelnuovo_suite(caps: &Caps, out: &mut Vec<Check>) -> Result<(), CliError> {
    let b = bounds(caps, 16, 3);
    for r in 1..=b.r {
        for s in 1..=3u32 {
            let g = r * s + s;
            if g > b.g {
                continue;
            }
            let shape = BoxShape::for_grassmannian(r, r * s + r)?;
            let integral = sigma1r_power_table(g, shape).integrate();
            out.push(Check::equal(format!("castelnuovo r={r} s={s}"), castelnuovo(r, s)?, integral));
        }
    }
    Ok(())
}

pub fn crosscheck(suite: Suite, caps: &Caps) -> Result<Report, CliError> {
    type Runner = fn(&Caps, &mut Vec<Check>) -> Result<(), CliError>;
    let all: [(Suite, &str, Runner); 6] = [
        (Suite::R1, "r1", r1_suite),
        (Suite::LargeD, "large-d", large_d_suite),
        (Suite::Tableaux, "tableaux", tableaux_suite),
        (Suite::Cps, "cps", cps_suite),
        (Suite::Ramified, "ramified", ramified_suite),
        (Suite::Castelnuovo, "castelnuovo", castelnuovo_suite),
    ];
    let mut checks = Vec::new();
    let mut names = Vec::new();
    for (s, name, run) in all {
        if suite == s || suite == Suite::All {
            run(caps, &mut checks)?;
            names.push(name);
        }
    }
    let passed = checks.iter().filter(|c| c.pass).count();
    let mut problem = vec![("suite", names.join(","))];
    if let Some(g) = caps.max_g {
        problem.push(("max_g", g.to_string()));
    }
    if let Some(r) = caps.max_r {
        problem.push(("max_r", r.to_string()));
    }
    problem.push(("checks", checks.len().to_string()));
    let mut rep = Report::new(&problem, passed, Method::Oracle);
    rep.checks = checks;
    Ok(rep)
}

/// Crosscheck reports list failures in full and only count the passes.
pub fn render_crosscheck(rep: &Report, format: Format) -> String {
    if format != Format::Plain {
        return rep.render(format);
    }
    let mut out = String::new();
    for c in rep.checks.iter().filter(|c| !c.pass) {
        out.push_str(&crate::report::plain_check(c));
        out.push('\n');
    }
    let failed = rep.checks.len() - rep.checks.iter().filter(|c| c.pass).count();
    out.push_str(&format!(
        "suite {}: {} checks, {} passed, {} failed\n",
        rep.problem["suite"],
        rep.checks.len(),
        rep.value,
        failed
    ));
    out
}

// ---------------------------------------------------------------------------
// Tables

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub kind: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn render(&self, format: Format) -> String {
        let header: Vec<&str> = self.columns.iter().map(String::as_str).collect();
        match format {
            Format::Json => to_json(self),
            Format::Csv => csv_table(&header, &self.rows),
            Format::Markdown => markdown_table(&header, &self.rows),
            Format::Plain => plain_table(&header, &self.rows),
        }
    }
}

fn cell(value: &BigInt, proven: bool) -> String {
    if proven {
        value.to_string()
    } else {
        format!("{value}*")
    }
}

pub fn table(
    kind: TableKind,
    g_range: RangeInclusive<u32>,
    d_range: RangeInclusive<u32>,
    r: Option<u32>,
    k: Option<u32>,
    limits: Limits,
) -> Result<Table, CliError> {
    limits.check_g(*g_range.end())?;
    if *d_range.start() == 0 {
        return Err(CliError::Invalid("d-range must start at 1 or later".into()));
    }
    match kind {
        TableKind::Tevelev => {
            if k.is_some() {
                return Err(CliError::Invalid("--k applies only to the cps table".into()));
            }
            let r = r.unwrap_or(1);
            if r == 0 {
                return Err(CliError::Invalid("r must be at least 1".into()));
            }
            limits.check_r(r)?;
            let mut rows = Vec::new();
            for g in g_range {
                for d in d_range.clone() {
                    let (n, value) = match classify(g, r, d) {
                        Ok(p) => {
                            let v = tevelev_integral(&p);
                            let shown = if p.regime == Regime::Empty { "0".to_string() } else { cell(&v.value, v.proven) };
                            (p.n.to_string(), shown)
                        }
                        Err(Error::NotBalanced { .. }) => (NOT_BALANCED.to_string(), NOT_BALANCED.to_string()),
                        Err(e) => return Err(e.into()),
                    };
                    rows.push(vec![g.to_string(), r.to_string(), d.to_string(), n, value]);
                }
            }
            Ok(Table { kind: "tevelev".into(), columns: cols(&["g", "r", "d", "n", "L"]), rows })
        }
        TableKind::Cps => {
            if r.is_some_and(|r| r != 1) {
                return Err(CliError::Invalid("the cps table has r = 1".into()));
            }
            let k = k.unwrap_or(1);
            let mut rows = Vec::new();
            for g in g_range {
                for d in d_range.clone() {
                    let n = 2 * i64::from(d) + 1 - i64::from(g);
                    let value = match CpsProblem::new(g, d, k) {
                        Ok(p) => cps_degree(&p).to_string(),
                        Err(Error::InvalidK { .. }) => NOT_BALANCED.to_string(),
                        Err(e) => return Err(e.into()),
                    };
                    rows.push(vec![g.to_string(), d.to_string(), k.to_string(), n.to_string(), value]);
                }
            }
            Ok(Table { kind: "cps".into(), columns: cols(&["g", "d", "k", "n", "L'"]), rows })
        }
    }
}

fn cols(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn limits() -> Limits {
        Limits { max_g: DEFAULT_MAX_G, max_r: DEFAULT_MAX_R }
    }

    fn row<'a>(t: &'a Table, key: &[&str]) -> &'a [String] {
        t.rows.iter().find(|r| r.iter().zip(key).all(|(a, b)| a == b)).expect("row present")
    }

    #[test]
    fn tevelev_table_cells() {
        let t = table(TableKind::Tevelev, 0..=5, 1..=6, Some(1), None, limits()).unwrap();
        assert_eq!(row(&t, &["3", "1", "3"])[4], "4");
        assert_eq!(row(&t, &["4", "1", "2"])[4], "0");
        let t = table(TableKind::Tevelev, 2..=3, 4..=6, Some(2), None, limits()).unwrap();
        assert_eq!(row(&t, &["2", "2", "5"])[4], NOT_BALANCED);
        assert!(row(&t, &["3", "2", "6"])[4].ends_with('*'));
    }

    #[test]
    fn cps_table_cells() {
        let t = table(TableKind::Cps, 2..=2, 1..=4, None, Some(2), limits()).unwrap();
        assert_eq!(row(&t, &["2", "3", "2"])[4], "3");
        assert_eq!(row(&t, &["2", "1", "2"])[4], NOT_BALANCED);
    }

    #[test]
    fn caps_are_enforced() {
        let small = Limits { max_g: 3, max_r: 1 };
        assert!(matches!(
            table(TableKind::Tevelev, 0..=4, 1..=2, None, None, small),
            Err(CliError::CapExceeded { name: "g", .. })
        ));
        assert!(matches!(
            table(TableKind::Tevelev, 0..=2, 1..=2, Some(2), None, small),
            Err(CliError::CapExceeded { name: "r", .. })
        ));
    }

    #[test]
    fn suites_pass_at_small_bounds() {
        let caps = Caps { max_g: Some(3), max_r: Some(2) };
        let rep = crosscheck(Suite::All, &caps).unwrap();
        assert!(!rep.checks.is_empty());
        assert!(rep.all_pass());
    }
}
