use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use num_traits::Zero;
use posflag::actions::{apply_moebius, apply_shift, moebius_subspace, rev, rev_subspace, shift_matrix, Moebius};
use posflag::exact::rational::format_rational;
use posflag::flag::{partial_flag_counterexample, LevelReport};
use posflag::grassmann::describe;
use posflag::solver::{InstanceKind, NumericPositivity};
use posflag::subsets::key;
use posflag::{
    check_positivity_instance, classify_positivity, d_count, flag_positivity_plucker, flag_positivity_wronskian,
    io, parse_rational, perp, plucker_coordinates, schubert_solve, sturm_root_count, wronski_solve, wronskian_det,
    ExactMatrix, FlagRep, InstanceSpec, Mode, NumericSolution, PointMultiset, Poly, PositivityTag, ProjInterval,
    Rational, SolverOptions, Status, SubspaceRep,
};
use serde_json::{json, Value};

use crate::{Command, Method, Report, Which};

pub fn run(cmd: &Command, opts: &SolverOptions) -> Result<Report> {
    match cmd {
        Command::TestFlag { file, method, mode } => test_flag(&read_matrix(file)?, *method, (*mode).into()),
        Command::TestGr { file } => test_gr(&read_matrix(file)?),
        Command::Wronskian { file, k } => wronskian(&read_matrix(file)?, *k),
        Command::Dual { file, n } => {
            let v = match (file, n) {
                (Some(f), _) => SubspaceRep::new(read_matrix(f)?)?,
                (None, Some(n)) => SubspaceRep::new(ExactMatrix::zeros(*n, 0))?,
                (None, None) => bail!("give a matrix file or --n for the zero subspace"),
            };
            dual(&v)
        }
        Command::Shift { file, t, n } => {
            let t = parse_rational(t)?;
            match (file, n) {
                (Some(f), _) => shift_subspace(&SubspaceRep::new(read_matrix(f)?)?, &t),
                (None, Some(n)) => {
                    let m = shift_matrix(*n, &t);
                    let mut r = Report::new(format!("shift matrix, n = {n}, t = {}", format_rational(&t)), matrix_json(&m));
                    r.details = matrix_lines(&m);
                    Ok(r)
                }
                (None, None) => bail!("give a matrix file or --n"),
            }
        }
        Command::Sl2 { file, alpha, rev } => {
            let v = SubspaceRep::new(read_matrix(file)?)?;
            match alpha {
                Some(a) if !rev => sl2(&v, Some(&Moebius::parse(a)?)),
                _ => sl2(&v, None),
            }
        }
        Command::SolveWronski { k, n, roots } => solve_wronski(*k, *n, &PointMultiset::parse(roots)?, opts),
        Command::SolveSecant { spec } => solve_secant(&read_spec(spec)?, opts),
        Command::CheckConjecture { spec, which, output } => {
            check_conjecture(&read_spec(spec)?, *which, output.as_deref(), opts)
        }
        Command::Selftest => Ok(selftest(opts)),
    }
}

fn read_text(arg: &str) -> Result<String> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    if arg.trim_start().starts_with('{') {
        return Ok(arg.to_string());
    }
    fs::read_to_string(arg).with_context(|| format!("cannot read {arg}"))
}

fn read_matrix(path: &Path) -> Result<ExactMatrix> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    Ok(io::parse_matrix(&text)?)
}

fn read_spec(arg: &str) -> Result<InstanceSpec> {
    Ok(InstanceSpec::parse(&read_text(arg)?)?)
}

fn matrix_lines(m: &ExactMatrix) -> Vec<String> {
    io::format_matrix(m).lines().map(|l| format!("  {l}")).collect()
}

fn matrix_json(m: &ExactMatrix) -> Value {
    let rows: Vec<Vec<String>> = (0..m.rows()).map(|i| m.row(i).iter().map(format_rational).collect()).collect();
    json!(rows)
}

fn poly_json(p: &Poly) -> Value {
    json!(p.coeffs().iter().map(format_rational).collect::<Vec<_>>())
}

fn set_label(set: &[usize]) -> String {
    format!("{{{}}}", key(set))
}

fn tag_label(tag: PositivityTag) -> &'static str {
    match tag {
        PositivityTag::TotallyPositive => "TP",
        PositivityTag::TotallyNonnegative => "TNN",
        PositivityTag::Neither => "neither",
    }
}

/// The verdict relative to what `mode` asks for.
fn verdict_label(tag: PositivityTag, mode: Mode) -> &'static str {
    match (mode, tag) {
        (Mode::Positive, PositivityTag::TotallyPositive) => "TP",
        (Mode::Positive, _) => "not TP",
        (Mode::Nonnegative, PositivityTag::Neither) => "not TNN",
        (Mode::Nonnegative, _) => "TNN",
    }
}

/// `Wr` of a list of coefficient vectors; the empty list has `Wr = 1`.
fn wronskian_of(polys: &[Poly]) -> Result<Poly> {
    if polys.is_empty() {
        return Ok(Poly::one());
    }
    Ok(wronskian_det(polys)?)
}

fn level_line(l: &LevelReport) -> String {
    format!(
        "  V_{}: Wr = {}; roots in (0,inf): {}; degree full: {}; Wr(0) != 0: {}",
        l.k, l.wronskian, l.roots_in_region, l.degree_ok, l.value_at_zero_nonzero
    )
}

fn test_flag(m: &ExactMatrix, method: Method, mode: Mode) -> Result<Report> {
    let f = FlagRep::new(m.clone())?;
    let plucker = flag_positivity_plucker(&f);
    let wr = flag_positivity_wronskian(&f, mode);
    let agree = plucker.tag == wr.verdict;
    let p_label = verdict_label(plucker.tag, mode);
    let w_label = verdict_label(wr.verdict, mode);
    let headline = match method {
        Method::Plucker => p_label.to_string(),
        Method::Wronskian => w_label.to_string(),
        Method::Both => format!("{p_label} / {w_label} / {}", if agree { "AGREE" } else { "MISMATCH" }),
    };
    let levels: Vec<Value> = wr
        .per_level
        .iter()
        .map(|l| {
            json!({
                "k": l.k,
                "wronskian": poly_json(&l.wronskian),
                "roots_in_region": l.roots_in_region,
                "degree_ok": l.degree_ok,
                "value_at_zero_nonzero": l.value_at_zero_nonzero,
            })
        })
        .collect();
    let mut r = Report::new(
        headline,
        json!({
            "n": f.n(),
            "mode": mode,
            "method": format!("{method:?}").to_lowercase(),
            "plucker": {"verdict": plucker.tag, "witness": plucker.witness.as_ref().map(|w| key(w))},
            "wronskian": {"verdict": wr.verdict, "passes": wr.passes(), "levels": levels},
            "agree": agree,
        }),
    );
    if method != Method::Wronskian {
        let w = plucker.witness.as_ref().map_or(String::new(), |w| format!(", witness {}", set_label(w)));
        r.details.push(format!("plucker: {}{w}", tag_label(plucker.tag)));
    }
    if method != Method::Plucker {
        r.details.push(format!("wronskian: {}", tag_label(wr.verdict)));
        r.details.extend(wr.per_level.iter().map(level_line));
    }
    if method == Method::Both && !agree {
        r.code = 1;
    }
    Ok(r)
}

fn test_gr(m: &ExactMatrix) -> Result<Report> {
    let v = SubspaceRep::new(m.clone())?;
    let p = plucker_coordinates(&v);
    let c = classify_positivity(&p);
    let w = c.witness.as_ref().map_or(String::new(), |w| format!(", witness {}", set_label(w)));
    let mut r = Report::new(
        format!("Gr({},{}): {}{w}", v.k(), v.n(), tag_label(c.tag)),
        json!({"pluckers": p.to_json(), "verdict": c.tag, "witness": c.witness.as_ref().map(|w| key(w))}),
    );
    r.details.push(describe(&p));
    Ok(r)
}

fn count(p: &Poly, interval: &ProjInterval) -> usize {
    sturm_root_count(p, interval, Some(0)).expect("nonzero polynomial")
}

fn wronskian(m: &ExactMatrix, k: Option<usize>) -> Result<Report> {
    let n = m.rows();
    let k = k.unwrap_or(m.cols());
    if k > m.cols() {
        bail!("--k {k} exceeds the {} columns given", m.cols());
    }
    let polys = m.leading_columns(k).column_polys();
    let w = wronskian_of(&polys)?;
    if w.is_zero() {
        return Ok(Report::new("zero Wronskian (dependent)", json!({"k": k, "n": n, "wronskian": []})));
    }
    let expected = k * (n - k);
    let negative = count(&w, &ProjInterval::negative_open());
    let positive = count(&w, &ProjInterval::positive_open());
    let at_zero = w.coeffs().iter().take_while(|c| c.is_zero()).count();
    let at_infinity = expected.saturating_sub(w.degree().unwrap_or(0));
    let primitive = w.primitive_positive();
    let mut r = Report::new(
        format!("{primitive}; roots in (0,inf): {positive}"),
        json!({
            "k": k,
            "n": n,
            "wronskian": poly_json(&w),
            "primitive": poly_json(&primitive),
            "roots": {"negative": negative, "zero": at_zero, "positive": positive, "infinity": at_infinity},
        }),
    );
    r.details = vec![
        format!("Wr = {w}"),
        format!("roots in (-inf,0): {negative}"),
        format!("multiplicity at 0: {at_zero}"),
        format!("roots in (0,inf): {positive}"),
        format!("multiplicity at inf: {at_infinity}"),
    ];
    Ok(r)
}

/// Columns brought to reduced echelon form and then scaled to coprime
/// integers with positive pivots.
fn echelon(v: &SubspaceRep) -> ExactMatrix {
    let n = v.n();
    if v.k() == 0 {
        return ExactMatrix::zeros(n, 0);
    }
    let (rows, _) = v.basis().transpose().rref();
    let cols: Vec<Vec<Rational>> = (0..v.k())
        .map(|i| Poly::new(rows.row(i).to_vec()).primitive_positive().padded_coeffs(n))
        .collect();
    ExactMatrix::from_columns(n, &cols).expect("columns of length n")
}

fn dual(v: &SubspaceRep) -> Result<Report> {
    let (n, k) = (v.n(), v.k());
    let w = perp(v);
    let back = perp(&w);
    let roundtrip = plucker_coordinates(&back).is_proportional(&plucker_coordinates(v));
    let rep = echelon(&w);
    let wr_v = wronskian_of(&v.polys())?;
    let wr_w = wronskian_of(&w.polys())?;
    let shared = wr_v.is_proportional(&wr_w);
    let headline = if k == 0 {
        format!("V = 0, so V^perp is all of Q[x]_<={}", n - 1)
    } else if k == n {
        "V is everything, so V^perp = 0".to_string()
    } else {
        format!("V^perp in Gr({},{})", n - k, n)
    };
    let mut r = Report::new(
        headline,
        json!({
            "n": n,
            "k": k,
            "perp": matrix_json(&rep),
            "wronskian": poly_json(&wr_v.primitive_positive()),
            "shared": shared,
            "double_perp_matches": roundtrip,
        }),
    );
    if rep.cols() > 0 {
        r.details.push("basis of V^perp:".into());
        r.details.extend(matrix_lines(&rep));
    }
    r.details.push(format!("shared Wronskian: {}", wr_v.primitive_positive()));
    r.details.push(format!("Wr(V) ~ Wr(V^perp): {shared}"));
    r.details.push(format!("(V^perp)^perp = V: {roundtrip}"));
    if !shared || !roundtrip {
        r.code = 1;
    }
    Ok(r)
}

fn shift_subspace(v: &SubspaceRep, t: &Rational) -> Result<Report> {
    let w = apply_shift(v, t);
    let wr = wronskian_of(&w.polys())?;
    let mut r = Report::new(
        format!("shifted by t = {}", format_rational(t)),
        json!({"basis": matrix_json(w.basis()), "wronskian": poly_json(&wr)}),
    );
    r.details.extend(matrix_lines(w.basis()));
    r.details.push(format!("Wr = {wr}"));
    Ok(r)
}

fn sl2(v: &SubspaceRep, alpha: Option<&Moebius>) -> Result<Report> {
    let (n, k) = (v.n(), v.k());
    let wr = wronskian_of(&v.polys())?;
    let (w, predicted, what) = match alpha {
        Some(a) => {
            let [p, q, s, t] = a.entries().map(format_rational);
            (moebius_subspace(a, v)?, apply_moebius(a, &wr, k * (n - k) + 1)?, format!("alpha = ({p},{q};{s},{t})"))
        }
        None => (rev_subspace(v), rev(&wr, k * (n - k) + 1)?, "rev".to_string()),
    };
    let moved = wronskian_of(&w.polys())?;
    let equivariant = moved.is_proportional(&predicted);
    let mut r = Report::new(
        format!("{what}: Wr equivariant: {equivariant}"),
        json!({"basis": matrix_json(w.basis()), "wronskian": poly_json(&moved), "equivariant": equivariant}),
    );
    r.details.extend(matrix_lines(w.basis()));
    r.details.push(format!("Wr = {moved}"));
    if !equivariant {
        r.code = 1;
    }
    Ok(r)
}

fn positivity_label(p: NumericPositivity) -> &'static str {
    match p {
        NumericPositivity::TotallyPositive => "TP",
        NumericPositivity::Indeterminate => "indeterminate",
        NumericPositivity::Neither => "neither",
    }
}

fn solution_line(i: usize, s: &NumericSolution) -> String {
    let coords: Vec<String> = s
        .pluckers
        .iter()
        .map(|(set, z)| {
            let idx: String = set.iter().map(usize::to_string).collect();
            if s.flags.is_real {
                format!("Δ{idx}={:.6}", z.re)
            } else {
                format!("Δ{idx}={:.6}{:+.6}i", z.re, z.im)
            }
        })
        .collect();
    format!(
        "  #{}: {}, {}, margin {:.3e}, residual {:.1e}: {}",
        i + 1,
        if s.flags.is_real { "real" } else { "nonreal" },
        positivity_label(s.flags.positivity),
        s.flags.margin,
        s.residual,
        coords.join(" ")
    )
}

/// 1 for too many solutions, 3 for too few unless repeated conditions
/// allow it.
fn count_code(found: usize, expected: usize, degenerate: bool) -> u8 {
    if found > expected {
        1
    } else if found == 0 || (found < expected && !degenerate) {
        3
    } else {
        0
    }
}

fn solutions_report(k: usize, n: usize, input: String, degenerate: bool, sols: &[NumericSolution]) -> Result<Report> {
    let expected: usize = d_count(k, n).try_into().context("expected count overflows")?;
    let mut r = Report::new(
        format!("Gr({k},{n}) {input}: {}/{expected} solutions", sols.len()),
        json!({
            "k": k,
            "n": n,
            "input": input,
            "found": sols.len(),
            "expected": expected,
            "degenerate": degenerate,
            "solutions": sols.iter().map(NumericSolution::to_json).collect::<Vec<_>>(),
        }),
    );
    r.details = sols.iter().enumerate().map(|(i, s)| solution_line(i, s)).collect();
    r.code = count_code(sols.len(), expected, degenerate);
    Ok(r)
}

fn solve_wronski(k: usize, n: usize, roots: &PointMultiset, opts: &SolverOptions) -> Result<Report> {
    let sols = wronski_solve(k, n, roots, opts)?;
    solutions_report(k, n, format!("roots {roots}"), roots.has_repeats(), &sols)
}

fn solve_secant(spec: &InstanceSpec, opts: &SolverOptions) -> Result<Report> {
    let InstanceSpec::Secant { k, n, conditions, .. } = spec else {
        bail!("solve-secant needs a spec with \"conditions\"");
    };
    let sols = schubert_solve(*k, *n, conditions, opts)?;
    let input = conditions.iter().map(|c| format!("{} in {}", c.points, c.interval)).collect::<Vec<_>>().join("; ");
    let degenerate = conditions.iter().any(|c| c.points.has_repeats());
    solutions_report(*k, *n, input, degenerate, &sols)
}

fn check_conjecture(
    spec: &InstanceSpec,
    which: Option<Which>,
    output: Option<&Path>,
    opts: &SolverOptions,
) -> Result<Report> {
    let kind = spec.kind();
    match (which, kind) {
        (Some(Which::Positivity), InstanceKind::Secant) => bail!("--which positivity needs a spec with \"roots\""),
        (Some(Which::Secant), InstanceKind::Positivity) => bail!("--which secant needs a spec with \"conditions\""),
        _ => {}
    }
    let report = spec.run(opts)?;
    let json = report.to_json();
    if let Some(path) = output {
        let text = serde_json::to_string_pretty(&json)?;
        fs::write(path, text + "\n").with_context(|| format!("cannot write {}", path.display()))?;
    }
    let mut r = Report::new(report.summary(), json.clone());
    r.details = report.solutions.iter().enumerate().map(|(i, s)| solution_line(i, s)).collect();
    if report.status == Status::Counterexample {
        r.dump = Some(json);
    }
    r.code = u8::try_from(report.exit_code()).expect("exit codes are small");
    Ok(r)
}

fn selftest(opts: &SolverOptions) -> Report {
    let checks: Vec<(&str, Result<bool>)> = vec![
        ("unipotent 3x3 flag with a=3, b=1, c=1 is TP by both tests", selftest_flag()),
        ("partial flag: positive Wronskians without positivity", Ok(selftest_partial())),
        ("perp of a 4x2 chart matches the pairing formula", selftest_dual()),
        ("Gr(2,4) Wronski instance with roots -1,-2,-3,-4 verified", selftest_solver(2, 4, &[-1, -2, -3, -4], opts)),
        ("Gr(1,5) Wronski instance with roots -1,-1,-2,-3 verified", selftest_solver(1, 5, &[-1, -1, -2, -3], opts)),
    ];
    let mut lines = Vec::new();
    let mut results = Vec::new();
    let mut passed = 0;
    for (name, res) in checks {
        let ok = matches!(res, Ok(true));
        passed += usize::from(ok);
        let note = match &res {
            Err(e) => format!(" ({e})"),
            _ => String::new(),
        };
        lines.push(format!("{} {name}{note}", if ok { "PASS" } else { "FAIL" }));
        results.push(json!({"name": name, "pass": ok}));
    }
    let total = lines.len();
    let mut r = Report::new(format!("selftest: {passed}/{total} passed"), json!({"checks": results}));
    r.details = lines;
    r.code = if passed == total { 0 } else { 1 };
    r
}

fn selftest_flag() -> Result<bool> {
    let f = FlagRep::new(ExactMatrix::from_i64(&[&[1, 0, 0], &[3, 1, 0], &[1, 1, 1]]))?;
    let plucker = flag_positivity_plucker(&f).tag;
    let wr = flag_positivity_wronskian(&f, Mode::Positive);
    let identity = FlagRep::new(ExactMatrix::identity(3))?;
    let id_tp = flag_positivity_wronskian(&identity, Mode::Positive).passes();
    Ok(plucker == PositivityTag::TotallyPositive && wr.passes() && !id_tp)
}

fn selftest_partial() -> bool {
    let ex = partial_flag_counterexample();
    let top = &ex.report.per_level[1].wronskian;
    ex.report.per_level.iter().all(|l| l.roots_in_region == 0)
        && top.primitive_positive() == Poly::from_i64(&[1, 1, 4, 1, 1])
        && ex.plucker.tag == PositivityTag::Neither
}

fn selftest_dual() -> Result<bool> {
    let (a, b, c, d) = (1, 2, 3, 4);
    let v = SubspaceRep::new(ExactMatrix::from_i64(&[&[1, 0], &[0, 1], &[a, b], &[c, d]]))?;
    let expected = SubspaceRep::new(ExactMatrix::from_i64(&[&[1, 0], &[0, 3], &[-3 * d, 3 * b], &[c, -a]]))?;
    Ok(perp(&v).same_subspace(&expected))
}

fn selftest_solver(k: usize, n: usize, roots: &[i64], opts: &SolverOptions) -> Result<bool> {
    let roots: Vec<Rational> = roots.iter().map(|&r| Rational::from_integer(r.into())).collect();
    let report = check_positivity_instance(k, n, &roots, opts)?;
    Ok(report.status == Status::Verified && report.solutions.iter().all(|s| s.flags.is_real))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn echelon_is_primitive() {
        let v = SubspaceRep::new(ExactMatrix::from_i64(&[&[2, 0], &[0, 3], &[4, 1], &[6, 2]])).unwrap();
        let e = echelon(&v);
        assert!(SubspaceRep::new(e.clone()).unwrap().same_subspace(&v));
        assert_eq!(e, ExactMatrix::from_i64(&[&[1, 0], &[0, 3], &[2, 1], &[3, 2]]));
    }
}
