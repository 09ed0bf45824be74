//! One check per property; each returns a description of the first
//! mismatch.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use symreal_core::algebra::BiPoly;
use symreal_core::algebra::{jacobian, rat, MultiPoly, Rational, UniPoly, Vars};
use symreal_core::realcount::{
    cauchy_index, count_real_roots, decide_detailed, derivative_list, fiber_real_root_count, isolate_real_roots, rational_roots,
    signs_at_isolated_roots, signs_at_roots, sturm_habicht, tarski_query, thom_encode, RealRoot, Sturm,
};
use symreal_core::symmetry::{
    apply_t_lambda, elementary_in_power_sums, elementary_in_z, matrix_z, partitions_min_length, power_sum_in_elementary, power_sums_in_z,
    to_elementary, to_power_sums, BlockVars, Partition,
};
use symreal_core::zerodim::{solve_zero_dim, verify_param};

use super::{distinct_rationals, distinct_surds, planted_fibers, random_invariant, random_symmetric, xs, QuadSurd};

pub type Check = Result<(), String>;

/// `T_lambda(Jac f) = Jac(T_lambda f) Z` for every partition of `n`.
pub fn jacobian_identity(f: &[MultiPoly]) -> Check {
    let n = f[0].nvars();
    let xnames: Vec<String> = xs(n).names().to_vec();
    let xrefs: Vec<&str> = xnames.iter().map(|s| s.as_str()).collect();
    let jac = jacobian(f, &xrefs).map_err(|e| e.to_string())?;
    for lambda in partitions_min_length(n, 0) {
        let lhs = jac.map(|p| apply_t_lambda(p, &lambda)).map_err(|e| e.to_string())?;
        let tf: Vec<MultiPoly> = f.iter().map(|p| apply_t_lambda(p, &lambda).unwrap()).collect();
        let bv = BlockVars::new(&lambda);
        let znames: Vec<&str> = bv.z().names().iter().map(|s| s.as_str()).collect();
        let rhs = jacobian(&tf, &znames).and_then(|j| j.mul_constant(&matrix_z(&lambda))).map_err(|e| e.to_string())?;
        if lhs != rhs {
            return Err(format!("identity fails at {} for {:?}", lambda, f.iter().map(|p| p.to_string()).collect::<Vec<_>>()));
        }
    }
    Ok(())
}

pub fn random_jacobian_case(rng: &mut ChaCha8Rng) -> Vec<MultiPoly> {
    let n = rng.gen_range(2..=6);
    let s = rng.gen_range(1..=2.min(n - 1));
    (0..s)
        .map(|_| {
            let d = rng.gen_range(1..=4);
            random_symmetric(rng, n, d)
        })
        .collect()
}

/// Both rewritings substitute back to `g`, and the elementary form equals
/// the power-sum form pushed through Newton's identities.
pub fn rewriting(g: &MultiPoly, lambda: &Partition) -> Check {
    let bv = BlockVars::new(lambda);
    let zeta = to_elementary(g, lambda).map_err(|e| e.to_string())?;
    let gamma = to_power_sums(g, lambda).map_err(|e| e.to_string())?;
    if zeta.substitute(&elementary_in_z(&bv), bv.z()).map_err(|e| e.to_string())? != *g {
        return Err(format!("elementary form of {} does not substitute back", g));
    }
    if gamma.substitute(&power_sums_in_z(&bv), bv.z()).map_err(|e| e.to_string())? != *g {
        return Err(format!("power-sum form of {} does not substitute back", g));
    }
    // p_{j,i} written in the e-variables of block i
    let mut images = Vec::with_capacity(bv.len());
    for b in 0..lambda.num_blocks() {
        let range = bv.block_range(b);
        let block_e: Vec<MultiPoly> = range.clone().map(|r| MultiPoly::var(bv.e(), r)).collect();
        for j in 1..=range.len() {
            let p = power_sum_in_elementary(j, range.len());
            images.push(p.substitute(&block_e, bv.e()).map_err(|e| e.to_string())?);
        }
    }
    if gamma.substitute(&images, bv.e()).map_err(|e| e.to_string())? != zeta {
        return Err(format!("power-sum and elementary forms of {} disagree", g));
    }
    // and the other direction of Newton's identities
    if zeta.substitute(&elementary_in_power_sums(&bv), bv.p()).map_err(|e| e.to_string())? != gamma {
        return Err(format!("Newton conversion of {} disagrees", g));
    }
    Ok(())
}

pub fn rewriting_shapes() -> Vec<Partition> {
    ["1^1", "1^2", "1^3", "1^4", "1^5", "1^2,2^1", "1^1,2^2", "1^2,3^3", "2^1,3^1,4^1", "1^5,2^1"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
}

pub fn random_rewriting_case(rng: &mut ChaCha8Rng, lambda: &Partition) -> MultiPoly {
    let d = rng.gen_range(1..=6);
    random_invariant(rng, lambda, d)
}

/// Planted finite system: either a grid of univariate factors or a
/// triangular system. Returns the equations, their variables and the
/// planted points.
pub fn planted_system(rng: &mut ChaCha8Rng) -> (Vec<MultiPoly>, Vars, Vec<Vec<Rational>>) {
    let k = rng.gen_range(1..=3);
    let names: Vec<String> = (1..=k).map(|i| format!("y{}", i)).collect();
    let vars = Vars::new(&names);
    let y = |i: usize| MultiPoly::var(&vars, i);
    let lin = |i: usize, r: &Rational| &y(i) - &MultiPoly::constant(&vars, r.clone());
    if rng.gen_bool(0.5) {
        // grid
        let roots: Vec<Vec<Rational>> = (0..k)
            .map(|_| {
                let m = rng.gen_range(1..=3);
                distinct_rationals(rng, m, 5)
            })
            .collect();
        let eqs = roots.iter().enumerate().map(|(i, rs)| rs.iter().fold(MultiPoly::one(&vars), |acc, r| &acc * &lin(i, r))).collect();
        let mut points: Vec<Vec<Rational>> = vec![vec![]];
        for rs in &roots {
            points = points.iter().flat_map(|p| rs.iter().map(move |r| [p.clone(), vec![r.clone()]].concat())).collect();
        }
        (eqs, vars, points)
    } else {
        // y1 in a root set, y_i = q_i(y_1, .., y_{i-1})
        let m = rng.gen_range(1..=5);
        let r1 = distinct_rationals(rng, m, 5);
        let mut eqs = vec![r1.iter().fold(MultiPoly::one(&vars), |acc, r| &acc * &lin(0, r))];
        let mut points: Vec<Vec<Rational>> = r1.iter().map(|r| vec![r.clone()]).collect();
        for i in 1..k {
            let mut q = MultiPoly::constant(&vars, rat(rng.gen_range(-3..=3)));
            for j in 0..i {
                let c = rat(rng.gen_range(-2..=2));
                let e = rng.gen_range(1..=2);
                q = &q + &y(j).pow(e).scale(&c);
            }
            eqs.push(&y(i) - &q);
            for p in &mut points {
                let val = q.eval(&[p.clone(), vec![Rational::zero(); k - i]].concat()).unwrap();
                p.push(val);
            }
        }
        (eqs, vars, points)
    }
}

pub fn planted_solver(rng: &mut ChaCha8Rng, seed: u64) -> Check {
    let (eqs, vars, points) = planted_system(rng);
    let report = solve_zero_dim(&eqs, &vars, seed);
    let param =
        report.param().ok_or_else(|| format!("no parametrization for {:?}", eqs.iter().map(|e| e.to_string()).collect::<Vec<_>>()))?;
    if !verify_param(param, &eqs) {
        return Err("parametrization does not verify".into());
    }
    if param.degree() != points.len() {
        return Err(format!("deg v = {} for {} planted points", param.degree(), points.len()));
    }
    let mut want: Vec<Rational> = points.iter().map(|p| p.iter().zip(param.mu()).map(|(x, m)| x * m).sum()).collect();
    want.sort();
    let mut got = rational_roots(param.v());
    got.sort();
    if got != want {
        return Err(format!("mu values {:?} against planted {:?}", got, want));
    }
    Ok(())
}

/// Planted univariate polynomial and its number of distinct real roots:
/// rational roots (repeats allowed), conjugate pairs `x^2 - d` with `d` a
/// non-square and complex quadratics.
pub fn planted_univariate(rng: &mut ChaCha8Rng) -> (UniPoly, usize) {
    let mut p = UniPoly::constant(rat(rng.gen_range(1..=4) * if rng.gen_bool(0.5) { 1 } else { -1 }));
    let mut real = BTreeSet::new();
    for _ in 0..rng.gen_range(0..=4) {
        let r = Rational::new(rng.gen_range(-6i64..=6).into(), rng.gen_range(1i64..=3).into());
        p = &p * &UniPoly::new(vec![-r.clone(), Rational::one()]);
        real.insert(r);
    }
    let mut surds = 0;
    let mut used = BTreeSet::new();
    for _ in 0..rng.gen_range(0..=2) {
        let d = [2i64, 3, 5, 6, 7][rng.gen_range(0..5)];
        if used.insert(d) {
            p = &p * &UniPoly::new(vec![rat(-d), Rational::zero(), Rational::one()]);
            surds += 2;
        }
    }
    for _ in 0..rng.gen_range(0..=2) {
        let (a, b) = (rat(rng.gen_range(-3..=3)), rat(rng.gen_range(1..=3)));
        p = &p * &UniPoly::new(vec![&a * &a + &b * &b, -(&a + &a), Rational::one()]);
    }
    if p.deg0() == 0 {
        p = &p * &UniPoly::new(vec![rat(1), rat(0), rat(1)]);
    }
    (p, real.len() + surds)
}

pub fn univariate_counts(p: &UniPoly, want: usize) -> Check {
    let sq = p.exact_div(&p.gcd(&p.derivative()));
    let counts = [
        ("sturm", count_real_roots(p)),
        ("sturm sequence", Sturm::new(p).count_all()),
        ("cauchy index", cauchy_index(&p.derivative(), p) as usize),
        ("tarski query", tarski_query(&UniPoly::one(), p) as usize),
        ("thom", thom_encode(&sq).map_err(|e| e.to_string())?.len()),
    ];
    for (name, got) in counts {
        if got != want {
            return Err(format!("{} count {} against planted {} for {}", name, got, want, p));
        }
    }
    let encs = thom_encode(&sq).map_err(|e| e.to_string())?;
    for (k, a) in encs.iter().enumerate() {
        if a.root_index != k || encs[k + 1..].iter().any(|b| b.signs == a.signs) {
            return Err(format!("encodings of {} not distinct and ordered", p));
        }
    }
    Ok(())
}

fn bimul(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let mut out = vec![UniPoly::zero(); a.coeffs().len() + b.coeffs().len() - 1];
    for (i, x) in a.coeffs().iter().enumerate() {
        for (j, y) in b.coeffs().iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    BiPoly::new(out)
}

/// Fibers over `v = prod (t - tau) * (t^2 - d)`: `rho = prod (u - a_m(t)) * (u^2 - b(t))`,
/// with the count at each root computed exactly in `Q(sqrt d)`.
pub fn surd_fibers(rng: &mut ChaCha8Rng) -> Check {
    let d = [2i64, 3, 5][rng.gen_range(0..3)];
    let m = rng.gen_range(0..=2);
    let taus = distinct_rationals(rng, m, 4);
    let v = &UniPoly::from_roots(&taus) * &UniPoly::new(vec![rat(-d), Rational::zero(), Rational::one()]);
    let small = |rng: &mut ChaCha8Rng| UniPoly::new((0..rng.gen_range(1..=3)).map(|_| rat(rng.gen_range(-2..=2))).collect());
    let lin: Vec<UniPoly> = (0..rng.gen_range(1..=3)).map(|_| small(rng)).collect();
    let b = if rng.gen_bool(0.7) { Some(small(rng)) } else { None };
    let mut rho = BiPoly::from_u_poly(&UniPoly::one());
    for a in &lin {
        rho = bimul(&rho, &BiPoly::new(vec![a.scale(&rat(-1)), UniPoly::one()]));
    }
    if let Some(b) = &b {
        rho = bimul(&rho, &BiPoly::new(vec![b.scale(&rat(-1)), UniPoly::zero(), UniPoly::one()]));
    }
    // real roots of v, ascending, as surds
    let mut thetas: Vec<QuadSurd> = taus.iter().map(|t| QuadSurd::rational(t.clone(), d)).collect();
    thetas.push(QuadSurd { a: Rational::zero(), b: -Rational::one(), d });
    thetas.push(QuadSurd { a: Rational::zero(), b: Rational::one(), d });
    thetas.sort_by(|x, y| x.cmp(y));
    let seq = sturm_habicht(&rho).map_err(|e| e.to_string())?;
    let encs = thom_encode(&v).map_err(|e| e.to_string())?;
    if encs.len() != thetas.len() {
        return Err(format!("{} encodings for {} roots", encs.len(), thetas.len()));
    }
    for (enc, theta) in encs.iter().zip(&thetas) {
        let vals: Vec<QuadSurd> = lin.iter().map(|a| QuadSurd::eval(a, theta)).collect();
        let mut want = distinct_surds(&vals);
        if let Some(b) = &b {
            let q = QuadSurd::eval(b, theta);
            let hits = |target: &QuadSurd| vals.iter().any(|a| a.mul(a).cmp(target).is_eq());
            match q.sign() {
                1 => want += 2 - vals.iter().filter(|a| a.mul(a).cmp(&q).is_eq()).map(|a| a.sign()).collect::<BTreeSet<_>>().len(),
                0 => want += if hits(&q) { 0 } else { 1 },
                _ => {}
            }
        }
        let got = fiber_real_root_count(&seq, enc).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!("fiber count {} against {} at theta = {:?} for rho with v = {}", got, want, theta, v));
        }
    }
    Ok(())
}

/// Planted parametrization with rational roots: the fast path, the Thom
/// path and the planted counts agree.
pub fn fast_and_thom_paths(rng: &mut ChaCha8Rng) -> Check {
    let t = rng.gen_range(1..=3);
    let planted = planted_fibers(rng, t);
    let fast = decide_detailed(&planted.param, &planted.partition, true).map_err(|e| e.to_string())?;
    let thom = decide_detailed(&planted.param, &planted.partition, false).map_err(|e| e.to_string())?;
    if fast.empty != thom.empty || fast.real_roots != thom.real_roots {
        return Err(format!("paths disagree on {}", planted.param.v()));
    }
    let want_empty = !planted.real_counts.contains(&t);
    if fast.empty != want_empty {
        return Err(format!("decision {} against planted {}", fast.empty, want_empty));
    }
    for f in &fast.fibers {
        let RealRoot::Rational(tau) = &f.root else {
            return Err("fast path left a rational root to Thom".into());
        };
        let k = planted.roots.iter().position(|r| r == tau).ok_or("unknown root")?;
        if f.counts != [1, planted.real_counts[k]] {
            return Err(format!("fast counts {:?} at {} against {}", f.counts, tau, planted.real_counts[k]));
        }
    }
    // Thom fibers come in ascending root order
    for (f, k) in thom.fibers.iter().zip(0..) {
        if f.counts != [1, planted.real_counts[k]] {
            return Err(format!("Thom counts {:?} at root {} against {}", f.counts, k, planted.real_counts[k]));
        }
    }
    Ok(())
}

/// Signs read off isolating intervals agree with sign determination on
/// Thom encodings, derivatives included.
pub fn isolation_matches_thom(rng: &mut ChaCha8Rng) -> Check {
    let (p, _) = planted_univariate(rng);
    let sq = p.exact_div(&p.gcd(&p.derivative()));
    let mut qs: Vec<UniPoly> =
        (0..3).map(|_| UniPoly::new((0..rng.gen_range(1..=5)).map(|_| rat(rng.gen_range(-4..=4))).collect())).collect();
    // one q sharing a factor with sq
    qs.push(&sq.derivative() * &UniPoly::new(vec![rat(-2), Rational::zero(), Rational::one()]));
    let thom = signs_at_roots(&sq, &qs).map_err(|e| e.to_string())?;
    let ivs = isolate_real_roots(&sq);
    if thom.len() != ivs.len() {
        return Err(format!("{} encodings for {} intervals", thom.len(), ivs.len()));
    }
    let ders = derivative_list(&sq);
    let iso_q: Vec<Vec<i8>> = qs.iter().map(|q| signs_at_isolated_roots(q, &sq, &ivs)).collect();
    let iso_d: Vec<Vec<i8>> = ders.iter().map(|q| signs_at_isolated_roots(q, &sq, &ivs)).collect();
    for (k, (enc, signs)) in thom.iter().enumerate() {
        let q_here: Vec<i8> = iso_q.iter().map(|s| s[k]).collect();
        let d_here: Vec<i8> = iso_d.iter().map(|s| s[k]).collect();
        if *signs != q_here || enc.signs != d_here {
            return Err(format!("root {} of {}: Thom {:?}/{:?}, isolation {:?}/{:?}", k, sq, enc.signs, signs, d_here, q_here));
        }
    }
    Ok(())
}
