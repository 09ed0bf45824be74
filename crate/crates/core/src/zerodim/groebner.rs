//! Buchberger's algorithm over the rationals with the sugar strategy and
//! the Gebauer-Moller pair criteria.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Zero};

use crate::algebra::{Monomial, MultiPoly, Rational, Vars};

/// Admissible monomial orders used by the solver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermOrder {
    Grevlex,
    /// Graded reverse lexicographic order on the weighted degree.
    Weighted(Vec<u32>),
}

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Grevlex => a.grevlex_cmp(b),
            TermOrder::Weighted(w) => a.weighted_grevlex_cmp(b, w),
        }
    }

    pub fn degree(&self, m: &Monomial) -> u32 {
        match self {
            TermOrder::Grevlex => m.degree(),
            TermOrder::Weighted(w) => m.weighted_degree(w),
        }
    }
}

pub(crate) type Terms = Vec<(Monomial, Rational)>;

#[derive(Clone, Debug)]
struct Entry {
    terms: Terms,
    sugar: u32,
}

impl Entry {
    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// A reduced, monic Groebner basis.
#[derive(Clone, Debug)]
pub struct Groebner {
    vars: Vars,
    order: TermOrder,
    basis: Vec<Terms>,
}

/// `a - c * m * b`, all term lists sorted decreasingly.
fn sub_scaled(a: &[(Monomial, Rational)], c: &Rational, m: &Monomial, b: &[(Monomial, Rational)], order: &TermOrder) -> Terms {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ia = 0;
    let mut ib = 0;
    let mut shifted: Option<(Monomial, Rational)> = b.first().map(|(bm, bc)| (bm.mul(m), bc * c));
    while ia < a.len() || shifted.is_some() {
        let take = match (&shifted, a.get(ia)) {
            (None, _) => Ordering::Greater,
            (Some(_), None) => Ordering::Less,
            (Some((sm, _)), Some((am, _))) => order.cmp(am, sm),
        };
        match take {
            Ordering::Greater => {
                out.push(a[ia].clone());
                ia += 1;
            }
            Ordering::Less => {
                let (sm, sc) = shifted.take().unwrap();
                out.push((sm, -sc));
                ib += 1;
                shifted = b.get(ib).map(|(bm, bc)| (bm.mul(m), bc * c));
            }
            Ordering::Equal => {
                let (sm, sc) = shifted.take().unwrap();
                let v = &a[ia].1 - sc;
                if !v.is_zero() {
                    out.push((sm, v));
                }
                ia += 1;
                ib += 1;
                shifted = b.get(ib).map(|(bm, bc)| (bm.mul(m), bc * c));
            }
        }
    }
    out
}

fn make_monic(t: &mut Terms) {
    if let Some((_, lc)) = t.first() {
        if !lc.is_one() {
            let inv = lc.recip();
            for (_, c) in t.iter_mut() {
                *c *= &inv;
            }
        }
    }
}

/// Full reduction of `p` by monic `reducers`.
fn reduce(mut p: Terms, reducers: &[&Terms], order: &TermOrder) -> Terms {
    let mut rem: Terms = Vec::new();
    loop {
        let Some((lm, lc)) = p.first().cloned() else {
            break;
        };
        match reducers.iter().find(|g| g[0].0.divides(&lm)) {
            Some(g) => {
                let q = g[0].0.quotient_of(&lm);
                p = sub_scaled(&p, &lc, &q, g, order);
            }
            None => {
                rem.push(p.remove(0));
                // move the remaining head terms that nothing can reduce in bulk
                while let Some((m, _)) = p.first() {
                    if reducers.iter().any(|g| g[0].0.divides(m)) {
                        break;
                    }
                    rem.push(p.remove(0));
                }
            }
        }
    }
    rem
}

fn sorted_terms(p: &MultiPoly, order: &TermOrder) -> Terms {
    let mut t: Terms = p.terms().to_vec();
    if !matches!(order, TermOrder::Grevlex) {
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
    }
    t
}

impl Groebner {
    /// Computes the reduced Groebner basis of the ideal generated by `polys`
    /// (all over `vars`).
    pub fn new(polys: &[MultiPoly], vars: &Vars, order: TermOrder) -> Self {
        let mut entries: Vec<Entry> = Vec::new();
        let mut active: Vec<bool> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();
        let mut unit = false;

        let mut inputs: Vec<Terms> = polys
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| {
                let mut t = sorted_terms(p, &order);
                make_monic(&mut t);
                t
            })
            .collect();
        inputs.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));

        let insert = |terms: Terms, entries: &mut Vec<Entry>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>| {
            let sugar = terms.iter().map(|(m, _)| order.degree(m)).max().unwrap_or(0);
            let h = entries.len();
            entries.push(Entry { terms, sugar });
            active.push(true);
            Self::update(h, entries, active, pairs, &order);
        };

        for t in inputs {
            if t[0].0.is_one() {
                unit = true;
                break;
            }
            let reducers: Vec<&Terms> = entries.iter().zip(&active).filter(|(_, a)| **a).map(|(e, _)| &e.terms).collect();
            let mut r = reduce(t, &reducers, &order);
            if r.is_empty() {
                continue;
            }
            make_monic(&mut r);
            if r[0].0.is_one() {
                unit = true;
                break;
            }
            insert(r, &mut entries, &mut active, &mut pairs);
        }

        while !unit && !pairs.is_empty() {
            let best = (0..pairs.len())
                .min_by(|&x, &y| pairs[x].sugar.cmp(&pairs[y].sugar).then_with(|| order.cmp(&pairs[x].lcm, &pairs[y].lcm)))
                .unwrap();
            let pair = pairs.swap_remove(best);
            let (gi, gj) = (&entries[pair.i], &entries[pair.j]);
            let qi = gi.lm().quotient_of(&pair.lcm);
            let qj = gj.lm().quotient_of(&pair.lcm);
            let sugar = (gi.sugar + order.degree(&qi)).max(gj.sugar + order.degree(&qj));
            let left: Terms = gi.terms[1..].iter().map(|(m, c)| (m.mul(&qi), c.clone())).collect();
            let s = sub_scaled(&left, &Rational::one(), &qj, &gj.terms[1..], &order);
            let reducers: Vec<&Terms> = entries.iter().zip(&active).filter(|(_, a)| **a).map(|(e, _)| &e.terms).collect();
            let mut r = reduce(s, &reducers, &order);
            if r.is_empty() {
                continue;
            }
            make_monic(&mut r);
            if r[0].0.is_one() {
                unit = true;
                break;
            }
            let h = entries.len();
            entries.push(Entry { terms: r, sugar });
            active.push(true);
            Self::update(h, &entries, &mut active, &mut pairs, &order);
        }

        if unit {
            return Groebner { vars: vars.clone(), order, basis: alloc::vec![alloc::vec![(Monomial::one(vars.len()), Rational::one())]] };
        }

        let mut minimal: Vec<Terms> = entries.into_iter().zip(active).filter(|(_, a)| *a).map(|(e, _)| e.terms).collect();
        minimal.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
        let mut kept: Vec<Terms> = Vec::new();
        for g in minimal {
            if !kept.iter().any(|k| k[0].0.divides(&g[0].0)) {
                kept.push(g);
            }
        }
        let mut basis = Vec::with_capacity(kept.len());
        for i in 0..kept.len() {
            let others: Vec<&Terms> = kept.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g).collect();
            let head = kept[i][0].clone();
            let mut tail = reduce(kept[i][1..].to_vec(), &others, &order);
            tail.insert(0, head);
            basis.push(tail);
        }
        Groebner { vars: vars.clone(), order, basis }
    }

    fn update(h: usize, entries: &[Entry], active: &mut [bool], pairs: &mut Vec<Pair>, order: &TermOrder) {
        let lh = entries[h].lm().clone();
        let sugar_of = |i: usize, j: usize, lcm: &Monomial| {
            let (a, b) = (&entries[i], &entries[j]);
            (a.sugar + order.degree(&a.lm().quotient_of(lcm))).max(b.sugar + order.degree(&b.lm().quotient_of(lcm)))
        };
        let cands: Vec<(usize, Monomial, bool)> = (0..h)
            .filter(|&g| active[g])
            .map(|g| {
                let lg = entries[g].lm();
                (g, lh.lcm(lg), lh.is_coprime(lg))
            })
            .collect();
        // chain criterion among the new pairs
        let mut keep = alloc::vec![true; cands.len()];
        for a in 0..cands.len() {
            if cands[a].2 {
                continue;
            }
            for b in 0..cands.len() {
                if a == b || !keep[b] {
                    continue;
                }
                if cands[b].1.divides(&cands[a].1) && (cands[b].1 != cands[a].1 || b < a) {
                    keep[a] = false;
                    break;
                }
            }
        }
        // product criterion
        let new_pairs: Vec<Pair> = cands
            .iter()
            .zip(&keep)
            .filter(|((_, _, coprime), k)| **k && !*coprime)
            .map(|((g, lcm, _), _)| Pair { i: *g, j: h, lcm: lcm.clone(), sugar: sugar_of(*g, h, lcm) })
            .collect();
        // old pairs made redundant by h
        pairs.retain(|p| !(lh.divides(&p.lcm) && entries[p.i].lm().lcm(&lh) != p.lcm && entries[p.j].lm().lcm(&lh) != p.lcm));
        pairs.extend(new_pairs);
        for (g, a) in active.iter_mut().enumerate().take(h) {
            if *a && lh.divides(entries[g].lm()) {
                *a = false;
            }
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Whether the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0][0].0.is_one()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| g[0].0.clone()).collect()
    }

    /// The basis elements as polynomials.
    pub fn polys(&self) -> Vec<MultiPoly> {
        self.basis.iter().map(|g| MultiPoly::from_terms(&self.vars, g.iter().cloned())).collect()
    }

    /// Variables without a pure power among the leading monomials; the ideal
    /// is zero-dimensional iff this is empty.
    pub fn free_variables(&self) -> Vec<usize> {
        if self.is_unit() {
            return Vec::new();
        }
        let mut pure = alloc::vec![false; self.vars.len()];
        for g in &self.basis {
            if let Some(v) = g[0].0.pure_power_var() {
                pure[v] = true;
            }
        }
        (0..self.vars.len()).filter(|&v| !pure[v]).collect()
    }

    pub fn is_zero_dimensional(&self) -> bool {
        self.free_variables().is_empty()
    }

    pub(crate) fn is_standard(&self, m: &Monomial) -> bool {
        !self.basis.iter().any(|g| g[0].0.divides(m))
    }

    /// Normal form of a term list sorted in this basis' order.
    pub(crate) fn normal_form_terms(&self, t: Terms) -> Terms {
        let reducers: Vec<&Terms> = self.basis.iter().collect();
        reduce(t, &reducers, &self.order)
    }

    /// Normal form of `p` (over the same variables).
    pub fn normal_form(&self, p: &MultiPoly) -> MultiPoly {
        let t = self.normal_form_terms(sorted_terms(p, &self.order));
        MultiPoly::from_terms(&self.vars, t)
    }

    /// Standard monomials in increasing order, or `None` when there are
    /// infinitely many.
    pub fn staircase(&self) -> Option<Vec<Monomial>> {
        if !self.is_zero_dimensional() {
            return None;
        }
        if self.is_unit() {
            return Some(Vec::new());
        }
        let n = self.vars.len();
        let mut found: alloc::collections::BTreeSet<Monomial> = alloc::collections::BTreeSet::new();
        let mut frontier = alloc::vec![Monomial::one(n)];
        found.insert(Monomial::one(n));
        while let Some(m) = frontier.pop() {
            for v in 0..n {
                let next = m.mul(&Monomial::var(n, v, 1));
                if self.is_standard(&next) && found.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        let mut out: Vec<Monomial> = found.into_iter().collect();
        out.sort_by(|a, b| self.order.cmp(a, b));
        Some(out)
    }
}
