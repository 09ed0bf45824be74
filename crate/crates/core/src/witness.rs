//! Exact certificates for a real point of the input variety.
//!
//! A witness pins down one real root `theta` of `v` by a rational interval
//! and, for every block, rational separators `u_0 < ... < u_t` at which the
//! fiber polynomial alternates in sign for every `theta` in the interval.
//! Alternation forces `t` distinct real roots, so the block coordinates are
//! real.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::algebra::{BiPoly, MultiPoly, Rational, UniPoly};
use crate::realcount::{isolate_real_roots, rational_roots, refine, Decision, RealRoot, Sturm};
use crate::symmetry::{apply_t_lambda, fiber_polynomials, to_elementary, Partition};
use crate::zerodim::ZeroDimParam;
use crate::{Error, Result};

const MAX_HALVINGS: usize = 400;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockWitness {
    /// Separators, strictly increasing, one more than the block size.
    pub separators: Vec<Rational>,
    /// Block coordinates at the midpoint of the interval, rounded.
    pub approx: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub partition: Partition,
    pub param: ZeroDimParam,
    /// Position of `theta` among the real roots of `v`, ascending.
    pub root_index: usize,
    /// `theta` lies in this closed interval; equal ends mean `theta` is
    /// rational.
    pub interval: (Rational, Rational),
    pub blocks: Vec<BlockWitness>,
}

impl Witness {
    /// An approximation of the real point in the original coordinates.
    pub fn approximate_point(&self) -> Vec<Rational> {
        let mut x = Vec::with_capacity(self.partition.n());
        let parts: Vec<usize> = self.partition.blocks().iter().map(|&(p, _)| p).collect();
        for (b, bw) in self.blocks.iter().enumerate() {
            for z in &bw.approx {
                x.extend(core::iter::repeat_n(z.clone(), parts[b]));
            }
        }
        x
    }
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

fn at_separator(rho: &BiPoly, u: &Rational) -> UniPoly {
    let mut acc = UniPoly::zero();
    for c in rho.coeffs().iter().rev() {
        acc = &acc.scale(u) + c;
    }
    acc
}

/// Sign of `q` on the whole of `[a, b]`, or 0 when it is not constant.
fn constant_sign(q: &UniPoly, a: &Rational, b: &Rational) -> i8 {
    let sa = q.sign_at(a);
    if sa == 0 || a == b {
        return sa;
    }
    if Sturm::new(q).count_in(a, b) == 0 {
        sa
    } else {
        0
    }
}

fn alternates(rho: &BiPoly, seps: &[Rational], a: &Rational, b: &Rational) -> bool {
    let mut prev = 0i8;
    for u in seps {
        let s = constant_sign(&at_separator(rho, u), a, b);
        if s == 0 || s == prev {
            return false;
        }
        prev = s;
    }
    true
}

/// Separators around the real roots of `rho(theta0, .)` when it has exactly
/// `t` of them, with those roots approximated to `width`.
fn separators_at(rho: &BiPoly, theta0: &Rational, t: usize, width: &Rational) -> Option<(Vec<Rational>, Vec<Rational>)> {
    let r = rho.eval_t(theta0);
    let sq = r.exact_div(&r.gcd(&r.derivative()));
    let ivs: Vec<(Rational, Rational)> = isolate_real_roots(&sq).iter().map(|iv| refine(&sq, iv, width)).collect();
    if ivs.len() != t || t == 0 {
        return None;
    }
    let one = Rational::from_integer(1.into());
    let mut seps = alloc::vec![&ivs[0].0 - &one];
    for k in 0..t - 1 {
        seps.push((&ivs[k].1 + &ivs[k + 1].0) * half());
    }
    seps.push(&ivs[t - 1].1 + &one);
    let approx = ivs.iter().map(|(lo, hi)| (lo + hi) * half()).collect();
    Some((seps, approx))
}

fn shrink(v: &UniPoly, a: &mut Rational, b: &mut Rational) {
    let mid = (&*a + &*b) * half();
    let sm = v.sign_at(&mid);
    if sm == 0 {
        *a = mid.clone();
        *b = mid;
    } else if sm == v.sign_at(a) {
        *a = mid;
    } else {
        *b = mid;
    }
}

/// Nearest multiple of `step`.
fn round_to(x: &Rational, step: &Rational) -> Rational {
    (x / step).round() * step
}

/// Recomputes the approximate fiber roots at a narrower enclosure of theta.
fn sharpen(v: &UniPoly, rhos: &[BiPoly], sizes: &[usize], (a, b): (&Rational, &Rational), width: &Rational, blocks: &mut [BlockWitness]) {
    let (mut a, mut b) = (a.clone(), b.clone());
    for _ in 0..MAX_HALVINGS {
        if &(&b - &a) <= width {
            break;
        }
        shrink(v, &mut a, &mut b);
    }
    let theta = (&a + &b) * half();
    for ((rho, &t), bw) in rhos.iter().zip(sizes).zip(blocks.iter_mut()) {
        if let Some((_, approx)) = separators_at(rho, &theta, t, width) {
            bw.approx = approx.iter().map(|x| round_to(x, width)).collect();
        }
    }
}

/// Builds the certificate for the root of `v` singled out by a non-empty
/// decision.
pub fn build_witness(param: &ZeroDimParam, partition: &Partition, decision: &Decision) -> Result<Witness> {
    let idx = decision.witness.ok_or(Error::NoWitness)?;
    let v = param.v().clone();
    let ivs = isolate_real_roots(&v);
    let rats = rational_roots(&v);
    let contains = |iv: &(Rational, Rational), x: &Rational| &iv.0 <= x && x <= &iv.1;
    let root_index = match &decision.fibers[idx].root {
        RealRoot::Rational(tau) => ivs.iter().position(|iv| contains(iv, tau)),
        RealRoot::Algebraic(enc) => {
            ivs.iter().enumerate().filter(|(_, iv)| !rats.iter().any(|r| contains(iv, r))).nth(enc.root_index).map(|(k, _)| k)
        }
    }
    .ok_or_else(|| Error::Certification("root of v not located".to_string()))?;
    let (mut a, mut b) = match &decision.fibers[idx].root {
        RealRoot::Rational(tau) => (tau.clone(), tau.clone()),
        RealRoot::Algebraic(_) => ivs[root_index].clone(),
    };
    let rhos = fiber_polynomials(param, partition)?;
    let sizes = partition.multiplicities();
    let width = Rational::new(1.into(), (1u64 << 40).into());
    for _ in 0..MAX_HALVINGS {
        let theta0 = (&a + &b) * half();
        let mut blocks = Vec::with_capacity(rhos.len());
        for (rho, &t) in rhos.iter().zip(&sizes) {
            match separators_at(rho, &theta0, t, &width) {
                Some((seps, approx)) if alternates(rho, &seps, &a, &b) => blocks.push(BlockWitness { separators: seps, approx }),
                _ => break,
            }
        }
        if blocks.len() == rhos.len() {
            sharpen(&v, &rhos, &sizes, (&a, &b), &width, &mut blocks);
            return Ok(Witness { partition: partition.clone(), param: param.clone(), root_index, interval: (a, b), blocks });
        }
        if a == b {
            break;
        }
        shrink(&v, &mut a, &mut b);
    }
    Err(Error::Certification("fiber separation did not stabilize".to_string()))
}

/// Independent check of a witness against the input system over
/// `x_1..x_n`: the parametrization solves the collapsed system exactly,
/// `v` has a root in the interval, and every block separates into real
/// roots throughout the interval.
pub fn certify(w: &Witness, system: &[MultiPoly]) -> Result<()> {
    let fail = |m: &str| Err(Error::Certification(m.to_string()));
    let v = w.param.v();
    if v.deg0() == 0 || !v.is_squarefree() {
        return fail("v is not a squarefree nonconstant polynomial");
    }
    for f in system {
        let g = to_elementary(&apply_t_lambda(f, &w.partition)?, &w.partition)?;
        if !g.vars().same(w.param.vars()) || !w.param.reduce(&g).is_zero() {
            return fail("parametrization does not solve the collapsed system");
        }
    }
    let (a, b) = &w.interval;
    if a > b {
        return fail("empty interval");
    }
    if a == b {
        if v.sign_at(a) != 0 {
            return fail("rational theta is not a root of v");
        }
    } else if v.sign_at(a) * v.sign_at(b) >= 0 {
        return fail("v does not change sign on the interval");
    }
    let rhos = fiber_polynomials(&w.param, &w.partition)?;
    let sizes = w.partition.multiplicities();
    if w.blocks.len() != rhos.len() {
        return fail("block count mismatch");
    }
    for ((rho, bw), &t) in rhos.iter().zip(&w.blocks).zip(&sizes) {
        if bw.separators.len() != t + 1 || bw.separators.windows(2).any(|p| p[0] >= p[1]) {
            return fail("separators malformed");
        }
        if !alternates(rho, &bw.separators, a, b) {
            return fail("fiber polynomial does not alternate at the separators");
        }
    }
    Ok(())
}
