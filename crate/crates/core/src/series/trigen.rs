use super::poly::Poly2;
use super::qseries::QSeries;
use crate::arith::{Cyclotomic, Ring};
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;

/// Three-variable generating function sum_k P_k(X, Y; q) T^(k-2) together
/// with a principal part c (X+Y)(XY-1)/(X^2 Y^2 T^2).
#[derive(Clone, Debug, PartialEq)]
pub struct TriGen<R> {
    pub principal: Option<R>,
    pub slices: BTreeMap<i32, Poly2<QSeries<R>>>,
}

impl<R: Ring> TriGen<R> {
    pub fn new() -> Self {
        TriGen { principal: None, slices: BTreeMap::new() }
    }

    /// The coefficient of T^(k-2).
    pub fn slice(&self, k: i32) -> Option<&Poly2<QSeries<R>>> {
        self.slices.get(&k)
    }

    pub fn weights(&self) -> impl Iterator<Item = i32> + '_ {
        self.slices.keys().copied()
    }
}

impl<R: Ring> Default for TriGen<R> {
    fn default() -> Self {
        Self::new()
    }
}

pub(crate) fn monomial_key(a: i32, b: i32) -> String {
    format!("X{a}_Y{b}")
}

impl TriGen<Cyclotomic> {
    pub fn to_json(&self) -> Value {
        let principal = self.principal.as_ref().map(|c| json!({ "coeff": c, "form": "(X+Y)(XY-1)/(X^2 Y^2 T^2)" }));
        let mut weights = Map::new();
        for (k, p) in &self.slices {
            let mut mons = Map::new();
            for (&(a, b), s) in p.pruned().terms() {
                mons.insert(monomial_key(a, b), serde_json::to_value(s).unwrap());
            }
            weights.insert(k.to_string(), json!({ "monomials": mons }));
        }
        json!({ "principal": principal, "weights": weights })
    }
}
