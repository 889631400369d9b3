use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::symmetric::symmetric_power_series;
use super::{GLIrrepLabel, ObjectShape};
use crate::alcove::principal_restriction;
use crate::error::{Error, Result};
use crate::prime::Prime;
use crate::ring::{fuse_simples, tensor, VerClass};

/// A character graded by torus weights, each graded piece a class in
/// `Ver_p`. Zero pieces are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedVerClass {
    p: Prime,
    grades: BTreeMap<Vec<i64>, VerClass>,
}

impl GradedVerClass {
    pub fn new(p: Prime) -> Self {
        GradedVerClass {
            p,
            grades: BTreeMap::new(),
        }
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn add(&mut self, weight: Vec<i64>, class: &VerClass) {
        if class.is_zero() {
            return;
        }
        let one = BigUint::from(1u32);
        self.grades
            .entry(weight)
            .or_insert_with(|| VerClass::zero(self.p))
            .add_assign_scaled(class, &one);
    }

    pub fn get(&self, weight: &[i64]) -> Option<&VerClass> {
        self.grades.get(weight)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[i64], &VerClass)> + '_ {
        self.grades.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn len(&self) -> usize {
        self.grades.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grades.is_empty()
    }
}

#[derive(Serialize, Deserialize)]
struct Grade {
    weight: Vec<i64>,
    class: VerClass,
}

impl Serialize for GradedVerClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.grades.len()))?;
        for (weight, class) in &self.grades {
            seq.serialize_element(&Grade {
                weight: weight.clone(),
                class: class.clone(),
            })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for GradedVerClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let list = Vec::<Grade>::deserialize(d)?;
        let p = list
            .first()
            .map(|g| g.class.prime())
            .ok_or_else(|| D::Error::custom("empty graded class has no prime"))?;
        let mut out = GradedVerClass::new(p);
        for g in list {
            if g.class.prime() != p {
                return Err(D::Error::custom("mixed primes in graded class"));
            }
            if g.class.is_zero() || out.grades.contains_key(&g.weight) {
                return Err(D::Error::custom("zero or repeated grade"));
            }
            out.grades.insert(g.weight, g.class);
        }
        Ok(out)
    }
}

impl fmt::Display for GradedVerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (weight, class) in &self.grades {
            let w: Vec<String> = weight.iter().map(i64::to_string).collect();
            writeln!(f, "({})\t{}", w.join(","), class)?;
        }
        Ok(())
    }
}

/// Truncated character of the generalized Verma module of `GL(n L_i)` with
/// highest weight `label`.
///
/// The product of three factors: the finite symmetric algebra on the
/// non-trivial part of each lower block `L_i ⊗ L_i*`, a polynomial algebra
/// on the trivial part truncated at total degree `degree_bound`, and the
/// highest-weight piece `⊗_j res(S_j)` at weight `lambda`. The block in
/// position `(a, b)`, `a > b`, has torus weight `e_a - e_b`.
pub fn verma_character(
    x: &ObjectShape,
    label: &GLIrrepLabel,
    degree_bound: u64,
) -> Result<GradedVerClass> {
    let p = x.prime();
    let factors = super::underlying_group(x);
    let (i, n) = match factors.as_slice() {
        [] => return Err(Error::EmptyShape),
        [(i, n)] => (*i, *n as usize),
        _ => return Err(Error::NotHomogeneous),
    };
    if label.prime() != p || label.shape() != *x {
        return Err(Error::InvalidLabel(format!(
            "{label} is not a label for {x}"
        )));
    }
    let factor = label.factor(i).expect("shape matches");

    let mut top = VerClass::unit(p);
    for s in &factor.s {
        top = tensor(&top, &principal_restriction(s))?;
    }

    let gl = fuse_simples(i, i, p)?;
    let y = gl.remove_one(1).expect("L_i ⊗ L_i contains L_1");
    let finite = symmetric_power_series(&y)?;

    // Keyed by (weight, polynomial degree used so far).
    let mut acc: BTreeMap<(Vec<i64>, u64), VerClass> = BTreeMap::new();
    acc.insert((factor.lambda.clone(), 0), top);
    let one = BigUint::from(1u32);
    for a in 0..n {
        for b in 0..a {
            let mut next: BTreeMap<(Vec<i64>, u64), VerClass> = BTreeMap::new();
            for ((weight, used), class) in &acc {
                for (k, piece) in finite.iter().enumerate() {
                    if piece.is_zero() {
                        continue;
                    }
                    let body = tensor(class, piece)?;
                    for d in 0..=degree_bound - used {
                        let shift = (k as u64 + d) as i64;
                        let mut w = weight.clone();
                        w[a] += shift;
                        w[b] -= shift;
                        next.entry((w, used + d))
                            .or_insert_with(|| VerClass::zero(p))
                            .add_assign_scaled(&body, &one);
                    }
                }
            }
            acc = next;
        }
    }

    let mut out = GradedVerClass::new(p);
    for ((weight, _), class) in acc {
        out.add(weight, &class);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alcove::AlcoveWeight;
    use crate::gl::LabelFactor;
    use crate::ring::simple;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn label(q: u64, i: usize, lambda: Vec<i64>, s: &[&[u32]]) -> GLIrrepLabel {
        let s = s
            .iter()
            .map(|parts| AlcoveWeight::new(i, p(q), parts.to_vec()).unwrap())
            .collect();
        GLIrrepLabel::new(p(q), vec![LabelFactor { i, lambda, s }]).unwrap()
    }

    #[test]
    fn rank_one_is_a_single_grade() {
        let x = ObjectShape::homogeneous(p(5), 2, 1).unwrap();
        let v = verma_character(&x, &label(5, 2, vec![0], &[&[2]]), 3).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v.get(&[0]), Some(&simple(3, p(5)).unwrap()));

        let x = ObjectShape::homogeneous(p(5), 1, 1).unwrap();
        let v = verma_character(&x, &label(5, 1, vec![4], &[&[]]), 2).unwrap();
        assert_eq!(v.to_string(), "(4)\tL1\n");
    }

    #[test]
    fn two_copies_of_l2() {
        let x = ObjectShape::homogeneous(p(5), 2, 2).unwrap();
        let v = verma_character(&x, &label(5, 2, vec![0, 0], &[&[], &[]]), 0).unwrap();
        let got: Vec<(Vec<i64>, String)> =
            v.iter().map(|(w, c)| (w.to_vec(), c.to_string())).collect();
        assert_eq!(
            got,
            vec![
                (vec![-2, 2], "L1".to_string()),
                (vec![-1, 1], "L3".to_string()),
                (vec![0, 0], "L1".to_string()),
            ]
        );
        let v = verma_character(&x, &label(5, 2, vec![0, 0], &[&[], &[]]), 2).unwrap();
        assert_eq!(v.get(&[-1, 1]).unwrap().to_string(), "L1 + L3");
        assert_eq!(v.get(&[-4, 4]).unwrap().to_string(), "L1");
    }

    #[test]
    fn errors() {
        let mixed = ObjectShape::new(p(5), vec![1, 1]).unwrap();
        let l = label(5, 2, vec![0], &[&[]]);
        assert_eq!(verma_character(&mixed, &l, 0), Err(Error::NotHomogeneous));
        let x = ObjectShape::homogeneous(p(5), 2, 2).unwrap();
        assert!(matches!(
            verma_character(&x, &l, 0),
            Err(Error::InvalidLabel(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let x = ObjectShape::homogeneous(p(5), 2, 2).unwrap();
        let v = verma_character(&x, &label(5, 2, vec![1, 0], &[&[2], &[]]), 1).unwrap();
        let s = serde_json::to_string(&v).unwrap();
        assert!(s.starts_with(r#"[{"weight":["#));
        assert_eq!(serde_json::from_str::<GradedVerClass>(&s).unwrap(), v);
    }
}
