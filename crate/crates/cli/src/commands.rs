//! Single computations, each producing one [`Report`].

use lincount_core::cps::{cps_degree, cps_formula, CpsProblem};
use lincount_core::schubert::{sigma1r_power_table, special_sum, BoxShape, Partition};
use lincount_core::tableaux::{count_by_red_shape, count_fillings, list_fillings};
use lincount_core::tevelev::{
    boundary_value, castelnuovo, classify, degeneration_sum, pullback_degree, r1_closed_forms, ramified_integral,
    ramified_large_d, tevelev_integral, tevelev_large_d, RamifiedProblem, Regime,
};
use lincount_core::BigInt;

use crate::error::CliError;
use crate::expr;
use crate::report::{Check, Method, Report, ShapeRow, OPEN_NOTE};

/// Largest g for which the inline tableaux check is run.
const INLINE_TABLEAUX_MAX_G: u32 = 8;

fn two_pow(g: u32) -> BigInt {
    BigInt::from(2u32).pow(g)
}

pub fn tevelev(g: u32, r: u32, d: u32) -> Result<Report, CliError> {
    let p = classify(g, r, d)?;
    let integral = tevelev_integral(&p);
    let method = if p.regime == Regime::LargeD { Method::ClosedForm } else { Method::Integral };
    let mut rep = Report::new(
        &[
            ("g", g.to_string()),
            ("r", r.to_string()),
            ("d", d.to_string()),
            ("n", p.n.to_string()),
            ("rho", p.rho.to_string()),
        ],
        &integral.value,
        method,
    );
    rep.regime = Some(p.regime.to_string());
    rep.set_proven(integral.proven);

    if p.regime == Regime::LargeD {
        let closed = tevelev_large_d(&p)?;
        rep.checks.push(Check::equal("closed form = integral", &closed, &integral.value));
        rep.checks.push(Check::equal("degeneration sum = closed form", degeneration_sum(&p)?, &closed));
    }
    if r == 1 && 2 * d >= g + 2 {
        let forms = r1_closed_forms(g, d)?;
        rep.checks.push(Check::equal("pairing sum = integral", &forms.sum_form, &integral.value));
        rep.checks.push(Check::equal("binomial form = integral", &forms.binomial_form, &integral.value));
        rep.checks.push(Check::equal("difference form = integral", &forms.cps_form, &integral.value));
    }
    if g >= 1 && d == r * g {
        let boundary = boundary_value(g, r)?;
        if r == 1 {
            rep.checks.push(Check::equal("boundary formula = integral", boundary, &integral.value));
        } else {
            // For r > 1 the integral also counts constant maps at d = rg.
            rep.note = Some(format!(
                "{OPEN_NOTE}; the count at d = rg is (r+1)^g - (d+1) = {boundary}, the integral includes constant-map excess"
            ));
        }
    }
    if g <= INLINE_TABLEAUX_MAX_G && d > r {
        if let Ok(count) = count_fillings(g, r, d) {
            rep.checks.push(Check::equal("grid fillings = integral", count, &integral.value));
        }
    }
    Ok(rep)
}

pub fn cps(g: u32, d: u32, k: u32) -> Result<Report, CliError> {
    let p = CpsProblem::new(g, d, k)?;
    let value = cps_degree(&p);
    let mut rep = Report::new(
        &[("g", g.to_string()), ("d", d.to_string()), ("k", k.to_string()), ("n", p.n.to_string())],
        &value,
        Method::Integral,
    );
    rep.regime = Some(Regime::RankOne.to_string());
    if k == 1 {
        let t = tevelev_integral(&classify(g, 1, d)?).value;
        rep.checks.push(Check::equal("k = 1 agrees with L", &value, t));
    }
    if p.n >= i64::from(d + k + 1) {
        rep.checks.push(Check::equal("stable range 2^g", &value, two_pow(g)));
    }
    if g >= 1 {
        let first = if k == 1 { cps_formula(g - 1, d - 1, 1) } else { cps_formula(g - 1, d - 1, k - 1) };
        let rhs = first + cps_formula(g - 1, d, k + 1);
        rep.checks.push(Check::equal("genus recursion", &value, rhs));
    }
    Ok(rep)
}

pub fn ramified(g: u32, r: u32, d: u32, ram: &[String]) -> Result<Report, CliError> {
    let lambdas = ram.iter().map(|s| expr::partition(s)).collect::<Result<Vec<_>, _>>()?;
    let p = RamifiedProblem::new(g, r, d, lambdas)?;
    let v = ramified_integral(&p)?;
    let ram_echo = p.ramification.iter().map(|l| format!("[{l}]")).collect::<Vec<_>>().join(" ");
    let mut rep = Report::new(
        &[
            ("g", g.to_string()),
            ("r", r.to_string()),
            ("d", d.to_string()),
            ("n", p.n.to_string()),
            ("ramification", ram_echo),
            ("lambda_tot", p.lambda_tot.to_string()),
        ],
        &v.value,
        if p.is_large_d() { Method::ClosedForm } else { Method::Integral },
    );
    rep.set_proven(v.proven);
    if p.is_large_d() {
        rep.checks.push(Check::equal("closed form = integral", ramified_large_d(&p)?, &v.value));
    }
    if p.m() == 0 {
        if let Ok(c) = classify(g, r, d) {
            rep.regime = Some(c.regime.to_string());
            rep.checks.push(Check::equal("unramified integral", tevelev_integral(&c).value, &v.value));
        }
    }
    Ok(rep)
}

pub fn pullback(r: u32, d: u32, lambda: &str) -> Result<Report, CliError> {
    let lam = expr::partition(lambda)?;
    let value = pullback_degree(&lam, r, d)?;
    let mut rep = Report::new(
        &[("r", r.to_string()), ("d", d.to_string()), ("lambda", lam.to_string())],
        &value,
        Method::Integral,
    );
    if lam == Partition::column(r) {
        rep.checks.push(Check::equal("degree of 1^r is r + 1", &value, r + 1));
    }
    if lam.is_empty() {
        rep.checks.push(Check::equal("codimension zero", &value, 1));
    }
    Ok(rep)
}

pub fn castelnuovo_report(r: u32, s: u32) -> Result<Report, CliError> {
    let value = castelnuovo(r, s)?;
    let (g, d) = (r * s + s, r * s + r);
    let mut rep = Report::new(
        &[("r", r.to_string()), ("s", s.to_string()), ("g", g.to_string()), ("d", d.to_string())],
        &value,
        Method::ClosedForm,
    );
    let shape = BoxShape::for_grassmannian(r, d)?;
    let integral = sigma1r_power_table(g, shape).integrate();
    rep.checks.push(Check::equal("closed form = integral", &value, integral));
    if let Ok(p) = classify(g, r, d) {
        rep.regime = Some(p.regime.to_string());
    }
    Ok(rep)
}

pub fn schubert_mul(shape: &str, lhs: &str, rhs: &str) -> Result<Report, CliError> {
    let b = expr::box_shape(shape)?;
    let (l, r) = (expr::monomial(lhs)?, expr::monomial(rhs)?);
    let left = expr::evaluate(&l, b)?;
    let right = expr::evaluate(&r, b)?;
    let prod = lincount_core::schubert::lr_multiply(&left, &right)?;
    let swapped = lincount_core::schubert::lr_multiply(&right, &left)?;
    let mut rep = Report::new(
        &[("box", b.to_string()), ("lhs", left.to_string()), ("rhs", right.to_string())],
        &prod,
        Method::Integral,
    );
    rep.checks.push(Check::equal("commutativity", &prod, &swapped));
    Ok(rep)
}

pub fn schubert_integrate(shape: &str, e: &str) -> Result<Report, CliError> {
    let b = expr::box_shape(shape)?;
    let class = expr::evaluate(&expr::monomial(e)?, b)?;
    Ok(Report::new(
        &[("box", b.to_string()), ("expr", e.trim().to_string()), ("class", class.to_string())],
        class.integrate(),
        Method::Integral,
    ))
}

pub fn tableaux(g: u32, r: u32, d: u32, list: Option<usize>, by_shape: bool) -> Result<Report, CliError> {
    let count = count_fillings(g, r, d)?;
    let mut rep = Report::new(&[("g", g.to_string()), ("r", r.to_string()), ("d", d.to_string())], &count, Method::Oracle);
    let shape = BoxShape::for_grassmannian(r, d)?;
    let total = i64::from(shape.dimension()) - i64::from(r * g);
    let sum = special_sum(total, shape);
    let integral = sigma1r_power_table(g, shape).pairing(&sum)?;
    rep.checks.push(Check::equal("fillings = integral", &count, integral));
    if d >= g + r {
        rep.checks.push(Check::equal("fillings = (r+1)^g", &count, BigInt::from(r + 1).pow(g)));
    }
    if by_shape {
        let split = count_by_red_shape(g, r, d)?;
        let weighted: BigInt = split.values().map(|c| &c.red * &c.blue).sum();
        rep.checks.push(Check::equal("sum of red * blue", weighted, &count));
        rep.shapes = Some(
            split
                .iter()
                .map(|(mu, c)| ShapeRow { shape: mu.to_string(), red: c.red.to_string(), blue: c.blue.to_string() })
                .collect(),
        );
    }
    if let Some(limit) = list {
        let fillings = list_fillings(g, r, d, limit)?;
        let valid = fillings.iter().filter(|f| f.validate(g, r).is_ok()).count();
        rep.checks.push(Check::equal("listed fillings valid", valid, fillings.len()));
        rep.fillings = Some(fillings.iter().map(|f| f.to_string()).collect());
    }
    Ok(rep)
}
