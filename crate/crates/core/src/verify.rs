//! Exhaustive property sweeps: fusion rules against the Jordan-type oracle,
//! ring axioms, alcove fusion, restriction, labels and Verma characters.

use std::fmt;

use num_bigint::BigUint;
use num_integer::binomial;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::alcove::{
    enumerate_simples, fuse_multisets, is_plus_weight, kac_walton_fuse, plus_simples,
    principal_restriction, principal_restriction_multiset, weyl_dimension, AlcoveWeight,
    DominantWeightMultiset,
};
use crate::error::Result;
use crate::gl::{
    count_labels, enumerate_labels, verma_character, GLIrrepLabel, LabelFactor, ObjectShape,
};
use crate::oracle::{semisimplify, sym_power_jordan, tensor_jordan};
use crate::prime::{odd_primes_up_to, Prime};
use crate::ring::{cat_dim, dual, fuse_simples, hom_dim, is_plus, simple, tensor, VerClass};

/// Default cap on the primes swept by [`run_suite`].
pub const DEFAULT_MAX_P: u64 = 13;

/// Reads the sweep cap from `VERLINDE_MAX_P`, falling back to
/// [`DEFAULT_MAX_P`].
pub fn max_p_from_env() -> u64 {
    std::env::var("VERLINDE_MAX_P")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_P)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Fusion rule against Jordan types of tensor products.
    Oracle,
    /// Vanishing and sharpness of symmetric powers.
    Nilpotence,
    /// Semiring axioms and the dimension homomorphism.
    Ring,
    /// Closure of `Ver_p^+` and the `sVec` subcategory.
    Subcat,
    /// `Ver_p(SL_2)` against `Ver_p`.
    Sl2,
    /// Alcove counts and the fusion semiring of `Ver_p(SL_i)`.
    Alcove,
    /// Principal restriction as a semiring map.
    Restriction,
    /// Label counts and distinctness.
    Labels,
    /// Highest-weight grade of Verma characters.
    Verma,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Oracle,
        Suite::Nilpotence,
        Suite::Ring,
        Suite::Subcat,
        Suite::Sl2,
        Suite::Alcove,
        Suite::Restriction,
        Suite::Labels,
        Suite::Verma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Nilpotence => "nilpotence",
            Suite::Ring => "ring",
            Suite::Subcat => "subcat",
            Suite::Sl2 => "sl2",
            Suite::Alcove => "alcove",
            Suite::Restriction => "restriction",
            Suite::Labels => "labels",
            Suite::Verma => "verma",
        }
    }
}

/// Outcome of one property over one sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {}/{} ({} cases)",
            self.suite.name(),
            self.name,
            self.cases
        )?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

struct Recorder {
    suite: Suite,
    out: Vec<Check>,
}

impl Recorder {
    /// Runs `body` on every case; the first failure message is kept.
    fn check<T, F>(&mut self, name: String, cases: Vec<T>, body: F)
    where
        T: Send + Sync,
        F: Fn(&T) -> std::result::Result<(), String> + Send + Sync,
    {
        let failures: Vec<String> = cases
            .par_iter()
            .filter_map(|c| body(c).err())
            .collect();
        self.out.push(Check {
            suite: self.suite,
            name,
            passed: failures.is_empty(),
            cases: cases.len(),
            detail: match failures.first() {
                None => String::new(),
                Some(first) => format!("{} failing, first: {first}", failures.len()),
            },
        });
    }
}

fn expect_eq<T: PartialEq + fmt::Display>(
    what: &str,
    got: T,
    want: T,
) -> std::result::Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn ok<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect()
}

fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    (1..=n)
        .flat_map(|i| (1..=n).flat_map(move |j| (1..=n).map(move |k| (i, j, k))))
        .collect()
}

/// Runs one suite over the odd primes up to `max_p`.
pub fn run_suite(suite: Suite, max_p: u64) -> Vec<Check> {
    let primes = odd_primes_up_to(max_p);
    let mut r = Recorder {
        suite,
        out: Vec::new(),
    };
    match suite {
        Suite::Oracle => oracle(&mut r, &primes),
        Suite::Nilpotence => nilpotence(&mut r, &primes),
        Suite::Ring => ring(&mut r, &primes),
        Suite::Subcat => subcat(&mut r, &primes),
        Suite::Sl2 => sl2(&mut r, &primes),
        Suite::Alcove => alcove(&mut r, &primes),
        Suite::Restriction => restriction(&mut r, &primes),
        Suite::Labels => labels(&mut r, &primes),
        Suite::Verma => verma(&mut r, &primes),
    }
    r.out
}

/// Runs every suite.
pub fn run_all(max_p: u64) -> Vec<Check> {
    Suite::ALL
        .iter()
        .flat_map(|&s| run_suite(s, max_p))
        .collect()
}

fn oracle(r: &mut Recorder, primes: &[Prime]) {
    for &p in primes {
        let n = p.rank();
        r.check(
            format!("semisimplified tensor p={p}"),
            pairs(n),
            |&(i, j)| {
                let t = ok(tensor_jordan(i, j, p))?;
                if t.dim() != i * j {
                    return Err(format!("M{i} x M{j}: dimension {}", t.dim()));
                }
                if cat_dim(&semisimplify(&t)) != (t.dim() as u64) % p.get() {
                    return Err(format!("M{i} x M{j}: dimension not preserved mod p"));
                }
                expect_eq(
                    &format!("L{i} x L{j}"),
                    semisimplify(&t),
                    ok(fuse_simples(i, j, p))?,
                )
            },
        );
    }
}

fn nilpotence(r: &mut Recorder, primes: &[Prime]) {
    for &p in primes {
        let q = p.as_usize();
        let vanishing: Vec<(usize, usize)> = (2..q)
            .flat_map(|i| (q - i + 1..q).map(move |n| (i, n)))
            .collect();
        r.check(
            format!("S^N(L_i) = 0 for N > p-i, p={p}"),
            vanishing,
            |&(i, n)| {
                let c = semisimplify(&ok(sym_power_jordan(i, n, p))?);
                if c.is_zero() {
                    Ok(())
                } else {
                    Err(format!("S^{n}(L{i}) = {c}"))
                }
            },
        );
        let sharp: Vec<usize> = (2..q).collect();
        r.check(format!("S^(p-i)(L_i) != 0, p={p}"), sharp, |&i| {
            let c = semisimplify(&ok(sym_power_jordan(i, q - i, p))?);
            if c.is_zero() {
                Err(format!("S^{}(L{i}) vanishes", q - i))
            } else {
                Ok(())
            }
        });
    }
}

fn ring(r: &mut Recorder, primes: &[Prime]) {
    for &p in primes {
        let n = p.rank();
        let l = |i| simple(i, p).expect("index in range");
        r.check(format!("commutativity p={p}"), pairs(n), |&(i, j)| {
            expect_eq(
                "XY vs YX",
                ok(tensor(&l(i), &l(j)))?,
                ok(tensor(&l(j), &l(i)))?,
            )
        });
        r.check(format!("associativity p={p}"), triples(n), |&(i, j, k)| {
            let left = ok(tensor(&ok(tensor(&l(i), &l(j)))?, &l(k)))?;
            let right = ok(tensor(&l(i), &ok(tensor(&l(j), &l(k)))?))?;
            expect_eq(&format!("(L{i} L{j}) L{k}"), left, right)
        });
        r.check(format!("unit p={p}"), (1..=n).collect(), |&i| {
            expect_eq("L1 x Li", ok(tensor(&VerClass::unit(p), &l(i)))?, l(i))
        });
        r.check(
            format!("dimension homomorphism p={p}"),
            pairs(n),
            |&(i, j)| {
                let d = cat_dim(&ok(tensor(&l(i), &l(j)))?);
                expect_eq(
                    &format!("dim L{i} x L{j}"),
                    d,
                    cat_dim(&l(i)) * cat_dim(&l(j)) % p.get(),
                )
            },
        );
        r.check(
            format!("Hom(L1, Li x Lj) = delta p={p}"),
            pairs(n),
            |&(i, j)| {
                let h = ok(hom_dim(
                    &VerClass::unit(p),
                    &ok(tensor(&l(i), &dual(&l(j))))?,
                ))?;
                expect_eq("hom", h, BigUint::from((i == j) as u32))
            },
        );
        r.check(
            format!("structure constants in {{0,1}} p={p}"),
            pairs(n),
            |&(i, j)| {
                let c = ok(fuse_simples(i, j, p))?;
                if c.mults().iter().all(|m| *m <= BigUint::from(1u32)) {
                    Ok(())
                } else {
                    Err(format!("L{i} x L{j} = {c}"))
                }
            },
        );
    }
}

fn subcat(r: &mut Recorder, primes: &[Prime]) {
    for &p in primes {
        let n = p.rank();
        let odd: Vec<(usize, usize)> = pairs(n)
            .into_iter()
            .filter(|(i, j)| i % 2 == 1 && j % 2 == 1)
            .collect();
        r.check(format!("Ver_p^+ closed p={p}"), odd, |&(i, j)| {
            let c = ok(fuse_simples(i, j, p))?;
            if is_plus(&c) {
                Ok(())
            } else {
                Err(format!("L{i} x L{j} = {c}"))
            }
        });
        r.check(format!("sVec p={p}"), vec![()], |_| {
            expect_eq("L(p-1)^2", ok(fuse_simples(n, n, p))?, VerClass::unit(p))?;
            expect_eq("L1 x L(p-1)", ok(fuse_simples(1, n, p))?, ok(simple(n, p))?)
        });
    }
}

fn as_verclass(m: &DominantWeightMultiset) -> std::result::Result<VerClass, String> {
    let p = m.prime();
    let terms = ok(m.alcove_terms())?
        .into_iter()
        .map(|(w, k)| (w.parts()[0] as usize + 1, k));
    ok(VerClass::from_terms(p, terms))
}

fn sl2(r: &mut Recorder, primes: &[Prime]) {
    for &p in primes {
        let n = p.rank();
        let w = |i: usize| AlcoveWeight::new(2, p, vec![i as u32 - 1]).expect("in alcove");
        r.check(format!("Ver_p(SL_2) = Ver_p p={p}"), pairs(n), |&(i, j)| {
            let f = ok(kac_walton_fuse(&w(i), &w(j)))?;
            expect_eq(
                &format!("({}) x ({})", i - 1, j - 1),
                as_verclass(&f)?,
                ok(fuse_simples(i, j, p))?,
            )
        });
    }
}

fn weight_pairs(s: &[AlcoveWeight]) -> Vec<(AlcoveWeight, AlcoveWeight)> {
    s.iter()
        .flat_map(|a| s.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

fn alcove(r: &mut Recorder, primes: &[Prime]) {
    for &p in primes {
        let q = p.as_usize();
        let ranks: Vec<usize> = (2..q).collect();
        r.check(format!("|simples| = C(p-1, i-1) p={p}"), ranks, |&i| {
            let got = ok(enumerate_simples(i, p))?.len();
            expect_eq(&format!("SL_{i}"), got, binomial(q - 1, i - 1))
        });
    }
    for &p in primes.iter().filter(|p| p.get() <= 7) {
        for i in 2..=4.min(p.rank()) {
            let s = enumerate_simples(i, p).expect("rank in range");
            let unit = AlcoveWeight::zero(i, p).expect("unit");
            r.check(
                format!("fusion unit and commutativity SL_{i} p={p}"),
                weight_pairs(&s),
                |(a, b)| {
                    let ab = ok(kac_walton_fuse(a, b))?;
                    if ab != ok(kac_walton_fuse(b, a))? {
                        return Err(format!("{a} x {b} not commutative"));
                    }
                    if ok(kac_walton_fuse(&unit, a))? != DominantWeightMultiset::from_weight(a) {
                        return Err(format!("unit x {a}"));
                    }
                    if is_plus_weight(a) && is_plus_weight(b) {
                        for (w, _) in ok(ab.alcove_terms())? {
                            if !is_plus_weight(&w) {
                                return Err(format!("{a} x {b} contains non-plus {w}"));
                            }
                        }
                    }
                    Ok(())
                },
            );
            let triples: Vec<(AlcoveWeight, AlcoveWeight, AlcoveWeight)> = s
                .iter()
                .flat_map(|a| {
                    weight_pairs(&s)
                        .into_iter()
                        .map(move |(b, c)| (a.clone(), b, c))
                })
                .collect();
            r.check(
                format!("fusion associativity SL_{i} p={p}"),
                triples,
                |(a, b, c)| {
                    let one = |w: &AlcoveWeight| DominantWeightMultiset::from_weight(w);
                    let left = ok(fuse_multisets(&ok(kac_walton_fuse(a, b))?, &one(c)))?;
                    let right = ok(fuse_multisets(&one(a), &ok(kac_walton_fuse(b, c))?))?;
                    expect_eq(&format!("({a} {b}) {c}"), left, right)
                },
            );
        }
    }
}

fn restriction(r: &mut Recorder, primes: &[Prime]) {
    for &p in primes.iter().filter(|p| p.get() <= 7) {
        for i in 2..=4.min(p.rank()) {
            let s = enumerate_simples(i, p).expect("rank in range");
            r.check(
                format!("restriction is multiplicative SL_{i} p={p}"),
                weight_pairs(&s),
                |(a, b)| {
                    let left = ok(principal_restriction_multiset(&ok(kac_walton_fuse(a, b))?))?;
                    let right = ok(tensor(&principal_restriction(a), &principal_restriction(b)))?;
                    expect_eq(&format!("res({a} x {b})"), left, right)
                },
            );
            r.check(
                format!("restriction preserves dimension SL_{i} p={p}"),
                s.clone(),
                |w| {
                    let res = principal_restriction(w);
                    expect_eq(
                        &format!("dim res{w}"),
                        cat_dim(&res),
                        (weyl_dimension(w) % p.get() as u128) as u64,
                    )?;
                    if is_plus_weight(w) && !is_plus(&res) {
                        return Err(format!("res{w} = {res} is not in Ver_p^+"));
                    }
                    Ok(())
                },
            );
        }
    }
    for &p in primes {
        let ranks: Vec<usize> = (2..p.as_usize()).collect();
        r.check(
            format!("tautological object restricts to L_i p={p}"),
            ranks,
            |&i| {
                let w = ok(AlcoveWeight::new(i, p, vec![1]))?;
                expect_eq(
                    &format!("res(1) for SL_{i}"),
                    principal_restriction(&w),
                    ok(simple(i, p))?,
                )
            },
        );
    }
}

fn random_shape(rng: &mut StdRng, p: Prime) -> ObjectShape {
    loop {
        let mut n = vec![0u64; p.rank()];
        let mut total = 0;
        for slot in n.iter_mut() {
            if total < 3 && rng.gen_bool(0.4) {
                *slot = rng.gen_range(1..=2.min(3 - total));
                total += *slot;
            }
        }
        if total > 0 {
            return ObjectShape::new(p, n).expect("length p - 1");
        }
    }
}

fn labels(r: &mut Recorder, primes: &[Prime]) {
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    let mut cases = Vec::new();
    for &p in primes.iter().filter(|p| matches!(p.get(), 5 | 7)) {
        for _ in 0..10 {
            let shape = random_shape(&mut rng, p);
            let bound = rng.gen_range(0..=2u64);
            cases.push((shape, bound));
        }
    }
    r.check(
        "count is a product over factors".into(),
        cases.clone(),
        |(x, b)| {
            let mut product = BigUint::from(1u32);
            for (i, n) in crate::gl::underlying_group(x) {
                let factor = ok(ObjectShape::homogeneous(x.prime(), i, n))?;
                product *= ok(count_labels(&factor, *b))?;
            }
            expect_eq(
                &format!("count {x} bound {b}"),
                ok(count_labels(x, *b))?,
                product,
            )
        },
    );
    r.check(
        "enumeration matches count, no duplicates".into(),
        cases.clone(),
        |(x, b)| {
            let list = ok(enumerate_labels(x, *b))?;
            expect_eq(
                &format!("labels of {x}"),
                BigUint::from(list.len()),
                ok(count_labels(x, *b))?,
            )?;
            let mut sorted = list.clone();
            sorted.sort();
            sorted.dedup();
            expect_eq(&format!("distinct labels of {x}"), sorted.len(), list.len())
        },
    );
    r.check(
        "degenerate indices carry only the weight".into(),
        cases,
        |(x, b)| {
            let p = x.prime();
            for label in ok(enumerate_labels(x, *b))? {
                for f in label.factors() {
                    if (f.i == 1 || f.i == p.rank()) && f.s.iter().any(|w| w.size() != 0) {
                        return Err(format!("{label}"));
                    }
                }
            }
            Ok(())
        },
    );
}

fn dominated_strictly(mu: &[i64], lambda: &[i64]) -> bool {
    let mut acc = 0i64;
    for (m, l) in mu.iter().zip(lambda) {
        acc += l - m;
        if acc < 0 {
            return false;
        }
    }
    acc == 0 && mu != lambda
}

fn verma(r: &mut Recorder, primes: &[Prime]) {
    let Some(&p) = primes.iter().find(|p| p.get() == 5) else {
        return;
    };
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    let x = ObjectShape::homogeneous(p, 2, 2).expect("valid shape");
    let alphabet = plus_simples(2, p).expect("rank in range");
    let cases: Vec<GLIrrepLabel> = (0..10)
        .map(|_| {
            let mut lambda = vec![rng.gen_range(-3..=3i64), rng.gen_range(-3..=3i64)];
            lambda.sort_unstable_by(|a, b| b.cmp(a));
            let s = (0..2)
                .map(|_| alphabet[rng.gen_range(0..alphabet.len())].clone())
                .collect();
            GLIrrepLabel::new(p, vec![LabelFactor { i: 2, lambda, s }]).expect("valid label")
        })
        .collect();
    r.check(
        "highest grade of 2L_2 Verma characters, p=5".into(),
        cases,
        |label| {
            let f = &label.factors()[0];
            let v = ok(verma_character(&x, label, 3))?;
            let mut top = VerClass::unit(p);
            for s in &f.s {
                top = ok(tensor(&top, &principal_restriction(s)))?;
            }
            match v.get(&f.lambda) {
                Some(c) if *c == top => {}
                other => {
                    return Err(format!(
                        "highest grade of {label}: {other:?}, expected {top}"
                    ))
                }
            }
            for (w, _) in v.iter() {
                if w != f.lambda.as_slice() && !dominated_strictly(w, &f.lambda) {
                    return Err(format!("grade {w:?} not below {:?}", f.lambda));
                }
            }
            Ok(())
        },
    );
}
