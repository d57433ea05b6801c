//! `verify` subcommand: each check mirrors one acceptance criterion and
//! reports PASS/FAIL with the first discrepancy.

use std::fmt;

use num_traits::Signed;
use pekt::characters::{hook_length_dimension, inner_product, multiplicity, ClassFunction};
use pekt::combinatorics::{cycle_type_of, Permutations};
use pekt::jfunction::{
    corollary1_check, finite_difference_check, j_by_correlators, j_closed, j_gl_specialization,
    j_symmetrized,
};
use pekt::lambda::{schur_weyl_lhs, schur_weyl_rhs, LambdaAlgebra, LambdaElement};
use pekt::point::{binomial_check, brute_force_trace, graded_trace, module_character, module_decomposition};
use pekt::series::one_minus_q_pow;
use pekt::{rational_to_string, BigInt, CharacterTable, Lambda, Partition, QSeries, Rational, Space};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::nu::{parse_nu, ParsedNu};
use crate::{Check, CliError, VerifyArgs};

/// One reported check.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckLine {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}: {}", self.name, self.detail)
    }
}

type Verdict = Result<String, String>;

fn line(name: &'static str, v: Verdict) -> CheckLine {
    match v {
        Ok(detail) => CheckLine { name, passed: true, detail },
        Err(detail) => CheckLine { name, passed: false, detail },
    }
}

fn show(x: &Rational) -> String {
    rational_to_string(x)
}

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn run(args: &VerifyArgs) -> Result<Vec<CheckLine>, CliError> {
    if args.check == Check::All {
        if args.n_max.is_some()
            || args.q_order.is_some()
            || args.weight_cap.is_some()
            || args.degree.is_some()
            || args.nu.is_some()
        {
            return Err(CliError::Usage(
                "verify all runs every check at its default size; only --seed and --samples apply".into(),
            ));
        }
        let checks = [
            Check::Theorem,
            Check::Corollary1,
            Check::FiniteDifference,
            Check::Corollary2,
            Check::Oracle,
            Check::SchurWeyl,
            Check::Orthogonality,
            Check::Binomial,
            Check::Positivity,
        ];
        return checks.iter().map(|&c| run_one(c, args)).collect();
    }
    Ok(vec![run_one(args.check, args)?])
}

fn run_one(check: Check, a: &VerifyArgs) -> Result<CheckLine, CliError> {
    let rng = a.seed.map(ChaCha8Rng::seed_from_u64);
    Ok(match check {
        Check::Theorem => {
            let n_max = a.n_max.unwrap_or(5);
            let m = a.q_order.unwrap_or(12);
            line("theorem", theorem(n_max, m, a.weight_cap, a.nu.as_deref(), rng, a.samples)?)
        }
        Check::Corollary1 => line(
            "corollary1",
            corollary1(a.n_max.unwrap_or(8), a.q_order.unwrap_or(20))?,
        ),
        Check::FiniteDifference => line(
            "finite-difference",
            finite_difference(a.n_max.unwrap_or(10), a.q_order.unwrap_or(15))?,
        ),
        Check::Corollary2 => line(
            "corollary2",
            corollary2(a.n_max.unwrap_or(4), a.q_order.unwrap_or(10))?,
        ),
        Check::Oracle => line("oracle", oracle(a.n_max.unwrap_or(5), a.q_order.unwrap_or(8))?),
        Check::SchurWeyl => line("schur-weyl", schur_weyl(a.n_max.unwrap_or(5))?),
        Check::Orthogonality => line("orthogonality", orthogonality(a.n_max.unwrap_or(8))?),
        Check::Binomial => line(
            "binomial",
            binomial(a.n_max.unwrap_or(5), a.q_order.unwrap_or(12), a.weight_cap, rng, a.samples)?,
        ),
        Check::Positivity => line(
            "positivity",
            positivity(a.n_max.unwrap_or(5), a.degree.unwrap_or(6), a.q_order.unwrap_or(12))?,
        ),
        Check::All => unreachable!("expanded by run"),
    })
}

/// `Σ_k c_k N_k` with `c_k ∈ {-2..2}`, `k ≤ 3`, not all zero.
fn random_nu(rng: &mut ChaCha8Rng, weight_cap: usize, q_order: usize) -> Lambda {
    loop {
        let mut nu = Lambda::zero(weight_cap, q_order);
        for k in 1..=3 {
            let c: i64 = rng.gen_range(-2..=2);
            nu = nu.add(&Lambda::power_sum(k, weight_cap, q_order).scale(&r(c)));
        }
        if !nu.is_zero() {
            return nu;
        }
    }
}

fn sum_of(gens: &[usize], weight_cap: usize, q_order: usize) -> Lambda {
    gens.iter().fold(Lambda::zero(weight_cap, q_order), |acc, &k| {
        acc.add(&Lambda::power_sum(k, weight_cap, q_order))
    })
}

fn theorem_one<A: LambdaAlgebra>(
    nu: &LambdaElement<Rational, A>,
    n_max: usize,
    q_order: usize,
    weight_cap: Option<usize>,
) -> Result<Option<String>, CliError> {
    let Some(max_w) = nu.max_weight() else {
        return Ok(None);
    };
    let w = weight_cap.unwrap_or(n_max * max_w.max(1));
    let by_corr = j_by_correlators(&nu.truncate(w, q_order), n_max, q_order, w)?;
    let complete = by_corr.complete_weight;
    let closed = j_closed(&nu.truncate(complete, q_order), q_order, complete)?;
    Ok(by_corr.compare(&closed, complete).map(|d| {
        format!(
            "monomial {} q^{}: correlators {} vs closed form {}",
            d.monomial,
            d.q_power,
            show(&d.lhs),
            show(&d.rhs)
        )
    }))
}

fn theorem(
    n_max: usize,
    q_order: usize,
    weight_cap: Option<usize>,
    nu: Option<&str>,
    rng: Option<ChaCha8Rng>,
    samples: usize,
) -> Result<Verdict, CliError> {
    let mut inputs: Vec<(String, ParsedNu)> = Vec::new();
    match nu {
        Some(expr) => {
            // Parse at a generous cap; theorem_one truncates to the working cap.
            let cap = weight_cap.unwrap_or(64);
            inputs.push((expr.to_string(), parse_nu(expr, cap, q_order)?));
        }
        None => {
            for gens in [&[1][..], &[2], &[1, 2], &[1, 2, 3]] {
                let w = n_max * gens.iter().max().unwrap();
                let name = gens.iter().map(|k| format!("N{k}")).collect::<Vec<_>>().join("+");
                inputs.push((name, ParsedNu::PowerSums(sum_of(gens, w, q_order))));
            }
        }
    }
    if let Some(mut rng) = rng {
        for _ in 0..samples {
            let nu = random_nu(&mut rng, n_max * 3, q_order);
            inputs.push((nu.to_string(), ParsedNu::PowerSums(nu)));
        }
    }
    for (name, nu) in &inputs {
        let failure = match nu {
            ParsedNu::PowerSums(l) => theorem_one(l, n_max, q_order, weight_cap)?,
            ParsedNu::Rank1(l) => theorem_one(l, n_max, q_order, weight_cap)?,
        };
        if let Some(f) = failure {
            return Ok(Err(format!("nu = {name}: {f}")));
        }
    }
    let plural = if inputs.len() == 1 { "" } else { "s" };
    Ok(Ok(format!(
        "{} input{plural}, n_max = {n_max}, q^{q_order}",
        inputs.len()
    )))
}

fn corollary1(n_max: usize, q_order: usize) -> Result<Verdict, CliError> {
    let report = corollary1_check::<Rational>(n_max, q_order)?;
    Ok(match report.first_failure {
        None => Ok(format!("x^2..x^{n_max} match 1/((1-q^2)...(1-q^n)) to q^{q_order}")),
        Some((n, k, a, b)) => Err(format!(
            "x^{n} q^{k}: correlators {} vs product {}",
            show(&a),
            show(&b)
        )),
    })
}

fn finite_difference(degree: usize, q_order: usize) -> Result<Verdict, CliError> {
    let j = j_symmetrized::<Rational>(degree, q_order)?;
    let f = j.scale_series(&one_minus_q_pow(1, q_order).invert()?);
    let report = finite_difference_check(&f, degree, q_order);
    Ok(match report.first_failure {
        None => Ok(format!("f(x) - f(qx) = x f(x) to x^{degree}, q^{q_order}")),
        Some((n, k, c)) => Err(format!("x^{n} q^{k}: residual {}", show(&c))),
    })
}

fn corollary2(degree: usize, q_order: usize) -> Result<Verdict, CliError> {
    let cases = [(r(1), 1), (r(2), 1), (r(3), 2), (Rational::new(1.into(), 2.into()), 2)];
    let mut monomials = 0;
    for (t, n_vars) in cases {
        let report = j_gl_specialization(&t, n_vars, q_order, degree)?;
        monomials += report.monomials_checked;
        if let Some((exps, k, a, b)) = report.first_failure {
            return Ok(Err(format!(
                "t = {}, N = {n_vars}, x^{exps:?} q^{k}: closed form {} vs q-exponential {}",
                show(&t),
                show(&a),
                show(&b)
            )));
        }
    }
    Ok(Ok(format!(
        "4 (t, N) cases, {monomials} monomials of degree <= {degree}, q^{q_order}"
    )))
}

fn first_mismatch(a: &QSeries, b: &QSeries) -> Option<(usize, Rational, Rational)> {
    (0..=a.order().min(b.order()))
        .find(|&k| a.coeff(k) != b.coeff(k))
        .map(|k| (k, a.coeff(k).clone(), b.coeff(k).clone()))
}

fn oracle(n_max: usize, q_order: usize) -> Result<Verdict, CliError> {
    let mut count = 0;
    for n in 1..=n_max {
        for perm in Permutations::new(n) {
            let mu = cycle_type_of(&perm);
            for space in [Space::Full, Space::Coxeter] {
                let brute: QSeries = brute_force_trace(&perm, space, q_order)?;
                let formula: QSeries = graded_trace(&mu, space, q_order);
                if let Some((k, a, b)) = first_mismatch(&brute, &formula) {
                    return Ok(Err(format!(
                        "permutation {perm:?} ({space:?}) q^{k}: fixed monomials {} vs product {}",
                        show(&a),
                        show(&b)
                    )));
                }
            }
            count += 1;
        }
    }
    Ok(Ok(format!("{count} permutations, q^{q_order}")))
}

fn schur_weyl(n_max: usize) -> Result<Verdict, CliError> {
    let mut classes = 0;
    for n in 1..=n_max {
        let table = CharacterTable::new(n)?;
        for mu in table.classes() {
            let lhs = schur_weyl_lhs::<Rational>(mu, n);
            let rhs = schur_weyl_rhs::<Rational>(mu, n, &table)?;
            if lhs != rhs {
                let diff = lhs.sub(&rhs);
                let (e, c) = diff.terms().next().expect("non-zero difference");
                return Ok(Err(format!(
                    "class {mu} in {n} variables: coefficient of x^{e:?} off by {}",
                    show(c)
                )));
            }
            classes += 1;
        }
    }
    Ok(Ok(format!("{classes} classes, N = n")))
}

fn orthogonality(n_max: usize) -> Result<Verdict, CliError> {
    for n in 1..=n_max {
        let table = CharacterTable::new(n)?;
        let chars: Vec<ClassFunction<Rational>> = table
            .irreps()
            .iter()
            .map(|s| ClassFunction::from_character(&table, s, 0))
            .collect::<Result<_, _>>()?;
        for a in 0..chars.len() {
            for b in a..chars.len() {
                let ip = inner_product(&chars[a], &chars[b])?;
                let expected = if a == b { r(1) } else { r(0) };
                if *ip.coeff(0) != expected {
                    return Ok(Err(format!(
                        "S_{n}: <chi_{}, chi_{}> = {}",
                        table.irreps()[a],
                        table.irreps()[b],
                        show(ip.coeff(0))
                    )));
                }
            }
        }
        let identity = Partition::ones(n).cycle_type();
        for shape in table.irreps() {
            let dim = table.value(shape, &identity)?;
            let hooks = BigInt::from(hook_length_dimension(shape));
            if dim != hooks {
                return Ok(Err(format!("chi_{shape}(id) = {dim}, hook lengths give {hooks}")));
            }
        }
    }
    Ok(Ok(format!("S_1..S_{n_max}")))
}

fn binomial(
    n_max: usize,
    q_order: usize,
    weight_cap: Option<usize>,
    rng: Option<ChaCha8Rng>,
    samples: usize,
) -> Result<Verdict, CliError> {
    let basic: [&[usize]; 3] = [&[1], &[2], &[1, 2]];
    let mut pairs: Vec<(Lambda, Lambda)> = Vec::new();
    for a in basic {
        for b in basic {
            pairs.push((sum_of(a, 64, q_order), sum_of(b, 64, q_order)));
        }
    }
    if let Some(mut rng) = rng {
        for _ in 0..samples {
            pairs.push((random_nu(&mut rng, 64, q_order), random_nu(&mut rng, 64, q_order)));
        }
    }
    let mut checked = 0;
    for n in 2..=n_max {
        for (a, b) in &pairs {
            let max_w = a.max_weight().max(b.max_weight()).unwrap_or(1);
            let w = weight_cap.unwrap_or(n * max_w);
            let report = binomial_check(&a.truncate(w, q_order), &b.truncate(w, q_order), n, q_order, w)?;
            if let Some(d) = report.discrepancy {
                return Ok(Err(format!(
                    "n = {n}, nu' = {a}, nu'' = {b}: monomial {} q^{}: {} vs {}",
                    d.monomial,
                    d.q_power,
                    show(&d.lhs),
                    show(&d.rhs)
                )));
            }
            checked += 1;
        }
    }
    Ok(Ok(format!("{checked} cases, 2 <= n <= {n_max}, q^{q_order}")))
}

fn positivity(n_max: usize, degree: usize, q_order: usize) -> Result<Verdict, CliError> {
    for n in 1..=n_max {
        let table = CharacterTable::new(n)?;
        for m in 0..=degree {
            let chi = module_character::<Rational>(n, m)?;
            for shape in table.irreps() {
                let mult = multiplicity(&chi, shape, &table)?;
                let c = mult.coeff(0);
                if !c.is_integer() || c.is_negative() {
                    return Ok(Err(format!(
                        "n = {n}, degree {m}: multiplicity of {shape} is {}",
                        show(c)
                    )));
                }
            }
        }
    }
    let table = CharacterTable::new(3)?;
    let trivial = Partition::new(vec![3])?;
    let series = module_decomposition::<Rational>(3, q_order, &table)?
        .into_iter()
        .find(|(s, _)| *s == trivial)
        .map(|(_, s)| s)
        .expect("trivial representation is listed");
    let expected = one_minus_q_pow::<Rational>(2, q_order)
        .mul(&one_minus_q_pow(3, q_order))
        .invert()?;
    if let Some((k, a, b)) = first_mismatch(&series, &expected) {
        return Ok(Err(format!(
            "trivial part for n = 3 at q^{k}: {} vs {}",
            show(&a),
            show(&b)
        )));
    }
    Ok(Ok(format!(
        "n <= {n_max}, degree <= {degree}; trivial part for n = 3 is 1/((1-q^2)(1-q^3)) to q^{q_order}"
    )))
}
