use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::{MultiPoly, Rational, UniPoly, Vars};

/// Zero-dimensional parametrization `((v, v_1..v_l), mu)`.
///
/// The points are `(v_1(tau)/v'(tau), ..., v_l(tau)/v'(tau))` for the roots
/// `tau` of `v`; `mu` is the linear form taking the value `tau` there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroDimParam {
    vars: Vars,
    v: UniPoly,
    coords: Vec<UniPoly>,
    mu: Vec<Rational>,
}

impl ZeroDimParam {
    pub fn new(vars: Vars, v: UniPoly, coords: Vec<UniPoly>, mu: Vec<Rational>) -> Self {
        ZeroDimParam { vars, v, coords, mu }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn v(&self) -> &UniPoly {
        &self.v
    }

    pub fn coords(&self) -> &[UniPoly] {
        &self.coords
    }

    pub fn mu(&self) -> &[Rational] {
        &self.mu
    }

    /// Number of points, `deg v`.
    pub fn degree(&self) -> usize {
        self.v.deg0()
    }

    /// `v'`, the common denominator of the coordinates.
    pub fn denominator(&self) -> UniPoly {
        self.v.derivative()
    }

    /// The coordinates at a rational root `tau` of `v`.
    pub fn point_at(&self, tau: &Rational) -> Option<Vec<Rational>> {
        let d = self.denominator().eval(tau);
        if d.is_zero() || !self.v.eval(tau).is_zero() {
            return None;
        }
        Some(self.coords.iter().map(|c| c.eval(tau) / &d).collect())
    }

    /// Homogenized image of `f` modulo `v`: `v'^{deg f} f(v_1/v', ..)` reduced
    /// modulo `v`. It vanishes iff `f` vanishes at every point.
    pub fn reduce(&self, f: &MultiPoly) -> UniPoly {
        let dp = self.denominator();
        let deg = f.total_degree().unwrap_or(0) as usize;
        let mut dpow = alloc::vec![UniPoly::one()];
        for _ in 0..deg {
            let next = dpow.last().unwrap().mul_mod(&dp, &self.v);
            dpow.push(next);
        }
        let mut cpow: Vec<Vec<UniPoly>> = self.coords.iter().map(|c| alloc::vec![UniPoly::one(), c.rem(&self.v)]).collect();
        let mut acc = UniPoly::zero();
        for (m, c) in f.terms() {
            let mut term = UniPoly::constant(c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let table = &mut cpow[i];
                while table.len() <= e as usize {
                    let next = table.last().unwrap().mul_mod(&table[1], &self.v);
                    table.push(next);
                }
                term = term.mul_mod(&table[e as usize], &self.v);
            }
            term = term.mul_mod(&dpow[deg - m.degree() as usize], &self.v);
            acc = &acc + &term;
        }
        acc.rem(&self.v)
    }

    /// `sum mu_k v_k - t v'` reduced modulo `v`.
    pub fn mu_defect(&self) -> UniPoly {
        let mut acc = -&UniPoly::x().mul_mod(&self.denominator(), &self.v);
        for (m, c) in self.mu.iter().zip(&self.coords) {
            acc = &acc + &c.scale(m);
        }
        acc.rem(&self.v)
    }
}

/// Checks the parametrization exactly: `v` squarefree (a constant `v` encodes
/// the empty set),
/// `deg v_k < deg v`, `sum mu_k v_k = t v' mod v`, and every equation of
/// `system` vanishing at the encoded points.
pub fn verify_param(r: &ZeroDimParam, system: &[MultiPoly]) -> bool {
    let d = r.v.deg0();
    if r.v.is_zero() || !r.v.is_squarefree() {
        return false;
    }
    if r.coords.len() != r.vars.len() || r.mu.len() != r.vars.len() {
        return false;
    }
    if r.coords.iter().any(|c| !c.is_zero() && c.deg0() >= d) {
        return false;
    }
    if !r.mu_defect().is_zero() {
        return false;
    }
    system.iter().all(|f| f.nvars() == r.vars.len() && r.reduce(f).is_zero())
}
