//! JSON encoding of arbitrary-precision multiplicities.
//!
//! Values that fit in `u128` are written as JSON integers; anything larger
//! falls back to a decimal string. Both forms are accepted on input.

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserializer, Serializer};

pub(crate) fn serialize_one<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    if let Some(x) = v.to_u64() {
        s.serialize_u64(x)
    } else if let Some(x) = v.to_u128() {
        s.serialize_u128(x)
    } else {
        s.serialize_str(&v.to_str_radix(10))
    }
}

struct One;

impl<'de> Visitor<'de> for One {
    type Value = BigUint;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a non-negative integer")
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigUint, E> {
        Ok(BigUint::from(v))
    }

    fn visit_u128<E: de::Error>(self, v: u128) -> Result<BigUint, E> {
        Ok(BigUint::from(v))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigUint, E> {
        u64::try_from(v)
            .map(BigUint::from)
            .map_err(|_| E::custom("negative multiplicity"))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<BigUint, E> {
        BigUint::parse_bytes(v.as_bytes(), 10).ok_or_else(|| E::custom("bad decimal string"))
    }
}

pub(crate) fn serialize_vec<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
    struct Wrap<'a>(&'a BigUint);
    impl serde::Serialize for Wrap<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            serialize_one(self.0, s)
        }
    }
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&Wrap(x))?;
    }
    seq.end()
}

pub(crate) fn deserialize_vec<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
    struct Elem(BigUint);
    impl<'de> serde::Deserialize<'de> for Elem {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            d.deserialize_any(One).map(Elem)
        }
    }
    struct Many;
    impl<'de> Visitor<'de> for Many {
        type Value = Vec<BigUint>;
        fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("a list of non-negative integers")
        }
        fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Vec<BigUint>, A::Error> {
            let mut out = Vec::new();
            while let Some(Elem(x)) = seq.next_element()? {
                out.push(x);
            }
            Ok(out)
        }
    }
    d.deserialize_seq(Many)
}
