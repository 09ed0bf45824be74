//! Generators and independent oracles shared by the integration suites.
#![allow(dead_code)]

pub mod checks;

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use symreal_core::algebra::{poly_parse, rat, MultiPoly, Rational, UniPoly, Vars};
use symreal_core::symmetry::{BlockVars, Partition};
use symreal_core::zerodim::ZeroDimParam;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn xs(n: usize) -> Vars {
    let names: Vec<_> = (1..=n).map(|i| format!("x{}", i)).collect();
    Vars::new(&names)
}

pub fn power_sum(n: usize, k: u32) -> String {
    (1..=n).map(|i| format!("x{}^{}", i, k)).collect::<Vec<_>>().join(" + ")
}

pub fn parse(vars: &Vars, text: &str) -> MultiPoly {
    poly_parse(text, vars).unwrap_or_else(|e| panic!("{}: {}", text, e))
}

/// Exponent vectors `a` with `sum (k+1) a_k <= d` over `kmax` generators.
fn weighted_exponents(kmax: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for k in 1..=kmax as u32 {
        let mut next = Vec::new();
        for a in &out {
            let used: u32 = a.iter().enumerate().map(|(i, e)| (i as u32 + 1) * e).sum();
            let mut e = 0;
            while used + k * e <= d {
                let mut b = a.clone();
                b.push(e);
                next.push(b);
                e += 1;
            }
        }
        out = next;
    }
    out
}

/// A random combination of products of the generators `gens[k]` (of weight
/// `k + 1`) of weight at most `d`, with a nonzero top-weight part.
fn random_combination(rng: &mut ChaCha8Rng, vars: &Vars, gens: &[MultiPoly], d: u32, terms: usize) -> MultiPoly {
    let monos = weighted_exponents(gens.len(), d);
    loop {
        let mut acc = MultiPoly::zero(vars);
        for _ in 0..terms {
            let a = &monos[rng.gen_range(0..monos.len())];
            let c = rat(rng.gen_range(-5i64..=5));
            let mut term = MultiPoly::constant(vars, c);
            for (g, &e) in gens.iter().zip(a) {
                if e > 0 {
                    term = &term * &g.pow(e);
                }
            }
            acc = &acc + &term;
        }
        if acc.total_degree().unwrap_or(0) > 0 {
            return acc;
        }
    }
}

/// Random symmetric polynomial in `x1..xn` of degree at most `d`, built
/// from power sums.
pub fn random_symmetric(rng: &mut ChaCha8Rng, n: usize, d: u32) -> MultiPoly {
    let vars = xs(n);
    let gens: Vec<MultiPoly> = (1..=d.min(n as u32).max(1)).map(|k| parse(&vars, &power_sum(n, k))).collect();
    random_combination(rng, &vars, &gens, d, 4)
}

/// Random polynomial over the z-variables of `partition`, invariant under
/// each block's symmetric group, of weighted degree at most `d`: products
/// of block power sums.
pub fn random_invariant(rng: &mut ChaCha8Rng, partition: &Partition, d: u32) -> MultiPoly {
    let bv = BlockVars::new(partition);
    let z = bv.z();
    let mut acc = MultiPoly::zero(z);
    for b in 0..partition.num_blocks() {
        let range = bv.block_range(b);
        let gens: Vec<MultiPoly> = (1..=range.len().min(d as usize))
            .map(|k| {
                let text = range.clone().map(|r| format!("{}^{}", z.names()[r], k)).collect::<Vec<_>>().join(" + ");
                parse(z, &text)
            })
            .collect();
        let part = random_combination(rng, z, &gens, d, 3);
        acc = if rng.gen_bool(0.5) || acc.is_zero() { &acc + &part } else { &acc * &part };
        if acc.total_degree().unwrap_or(0) > d {
            acc = part;
        }
    }
    acc
}

/// Elementary symmetric polynomials `e_0..e_t` of a list of numbers.
pub fn elementary_values(xs: &[Rational]) -> Vec<Rational> {
    let mut e = vec![Rational::one()];
    for x in xs {
        e.push(Rational::zero());
        for k in (1..e.len()).rev() {
            let add = &e[k - 1] * x;
            e[k] += add;
        }
    }
    e
}

/// Lagrange interpolation through `(x_k, y_k)`.
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> UniPoly {
    let mut acc = UniPoly::zero();
    for (k, (xk, yk)) in xs.iter().zip(ys).enumerate() {
        let mut basis = UniPoly::constant(yk.clone());
        for (m, xm) in xs.iter().enumerate() {
            if m != k {
                let lin = UniPoly::new(vec![-xm.clone(), Rational::one()]);
                basis = (&basis * &lin).scale(&(xk - xm).recip());
            }
        }
        acc = &acc + &basis;
    }
    acc
}

/// `a + b sqrt(d)` with `d` a positive non-square integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadSurd {
    pub a: Rational,
    pub b: Rational,
    pub d: i64,
}

impl QuadSurd {
    pub fn rational(a: Rational, d: i64) -> Self {
        QuadSurd { a, b: Rational::zero(), d }
    }

    pub fn add(&self, o: &QuadSurd) -> QuadSurd {
        QuadSurd { a: &self.a + &o.a, b: &self.b + &o.b, d: self.d }
    }

    pub fn mul(&self, o: &QuadSurd) -> QuadSurd {
        let d = rat(self.d);
        QuadSurd { a: &self.a * &o.a + &self.b * &o.b * d, b: &self.a * &o.b + &self.b * &o.a, d: self.d }
    }

    pub fn eval(p: &UniPoly, x: &QuadSurd) -> QuadSurd {
        let mut acc = QuadSurd::rational(Rational::zero(), x.d);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(x).add(&QuadSurd::rational(c.clone(), x.d));
        }
        acc
    }

    /// Exact sign of `a + b sqrt(d)`.
    pub fn sign(&self) -> i8 {
        let sa = sgn(&self.a);
        let sb = sgn(&self.b);
        if sa == 0 || sb == 0 || sa == sb {
            return if sa != 0 { sa } else { sb };
        }
        // opposite signs: compare a^2 with b^2 d
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * rat(self.d);
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn cmp(&self, o: &QuadSurd) -> Ordering {
        let diff = QuadSurd { a: &self.a - &o.a, b: &self.b - &o.b, d: self.d };
        diff.sign().cmp(&0)
    }
}

pub fn sgn(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Number of distinct values in a list of surds.
pub fn distinct_surds(xs: &[QuadSurd]) -> usize {
    let mut seen: Vec<&QuadSurd> = Vec::new();
    for x in xs {
        if !seen.iter().any(|y| y.cmp(x) == Ordering::Equal) {
            seen.push(x);
        }
    }
    seen.len()
}

/// `k` distinct small rationals.
pub fn distinct_rationals(rng: &mut ChaCha8Rng, k: usize, range: i64) -> Vec<Rational> {
    let mut set = BTreeSet::new();
    while set.len() < k {
        let num = rng.gen_range(-range..=range);
        let den = rng.gen_range(1..=3);
        set.insert(Rational::new(num.into(), den.into()));
    }
    set.into_iter().collect()
}

/// A planted parametrization over the e-variables of `1^1,2^t` (so
/// `n = 1 + 2t`): `e_{1,1}` takes the value `tau` at each root `tau` of `v`,
/// and the fiber of the size-`t` block above `tau` has the prescribed roots
/// (complex pairs `re +- i im` allowed). Returns the parametrization and,
/// per root, the number of distinct real fiber roots.
pub struct PlantedFibers {
    pub partition: Partition,
    pub param: ZeroDimParam,
    pub roots: Vec<Rational>,
    pub real_counts: Vec<usize>,
}

pub fn planted_fibers(rng: &mut ChaCha8Rng, t: usize) -> PlantedFibers {
    let partition: Partition = format!("1^1,2^{}", t).parse().unwrap();
    let bv = BlockVars::new(&partition);
    let m = rng.gen_range(1..=4);
    let roots = distinct_rationals(rng, m, 6);
    let v = UniPoly::from_roots(&roots);
    let mut columns: Vec<Vec<Rational>> = vec![Vec::new(); t];
    let mut real_counts = Vec::new();
    for _ in &roots {
        // fiber: either t integers (repeats allowed) or a complex pair plus integers
        let mut real: Vec<Rational> = Vec::new();
        let mut values: Vec<Rational> = Vec::new();
        let pair = t >= 2 && rng.gen_bool(0.4);
        if pair {
            let re = rat(rng.gen_range(-3..=3));
            let im = rat(rng.gen_range(1..=3));
            // (u - re)^2 + im^2 contributes e-values via its coefficients
            let quad = [&re * &re + &im * &im, -(&re + &re)];
            values.push(quad[0].clone());
            values.push(quad[1].clone());
        }
        while real.len() + if pair { 2 } else { 0 } < t {
            real.push(rat(rng.gen_range(-3..=3)));
        }
        // monic fiber polynomial, then e_j = (-1)^j coeff of u^(t-j)
        let mut fiber = UniPoly::from_roots(&real);
        if pair {
            fiber = &fiber * &UniPoly::new(vec![values[0].clone(), values[1].clone(), Rational::one()]);
        }
        for j in 1..=t {
            let c = fiber.coeff(t - j);
            columns[j - 1].push(if j % 2 == 0 { c } else { -c });
        }
        let distinct: BTreeSet<_> = real.iter().cloned().collect();
        real_counts.push(distinct.len());
    }
    let dv = v.derivative();
    let mut coords = vec![UniPoly::x().mul_mod(&dv, &v)];
    for col in &columns {
        coords.push(interpolate(&roots, col).mul_mod(&dv, &v));
    }
    let mut mu = vec![Rational::zero(); bv.len()];
    mu[0] = Rational::one();
    PlantedFibers { param: ZeroDimParam::new(bv.e().clone(), v, coords, mu), partition, roots, real_counts }
}
