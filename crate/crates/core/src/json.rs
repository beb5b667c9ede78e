//! JSON interchange.
//!
//! * `PicClass`: `[a, b]`
//! * `KClass`: `{"surface":"sigma2","rank":1,"c1":[0,1],"chi":2}`
//! * collections: a list of `KClass` objects
//! * twist words: `[{"T":0},{"Ti":1},{"OC":1},{"Sh":1}]` where `Ti` is `T'`
//! * group words: the string form `"s1,-s2,f3"`

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Result;
use crate::lattice::{KClass, PicClass, Surface};
use crate::mutation::{GroupWord, NumCollection};
use crate::twist::{Sign, TwistGenerator, TwistWord};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct KClassRepr {
    surface: Surface,
    rank: i64,
    c1: [i64; 2],
    chi: i64,
}

impl Serialize for KClass {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        KClassRepr { surface: self.surface(), rank: self.rank, c1: [self.c1.a, self.c1.b], chi: self.chi }
            .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for KClass {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let r = KClassRepr::deserialize(de)?;
        Ok(KClass::new(r.rank, PicClass::new(r.surface, r.c1[0], r.c1[1]), r.chi))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
enum GeneratorRepr {
    T(i64),
    Ti(i64),
    OC(i64),
    Sh(i64),
}

impl Serialize for TwistGenerator {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            TwistGenerator::Twist(a, Sign::Plus) => GeneratorRepr::T(a),
            TwistGenerator::Twist(a, Sign::Minus) => GeneratorRepr::Ti(a),
            TwistGenerator::TensorOC(m) => GeneratorRepr::OC(m),
            TwistGenerator::Shift(n) => GeneratorRepr::Sh(n),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for TwistGenerator {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        Ok(match GeneratorRepr::deserialize(de)? {
            GeneratorRepr::T(a) => TwistGenerator::Twist(a, Sign::Plus),
            GeneratorRepr::Ti(a) => TwistGenerator::Twist(a, Sign::Minus),
            GeneratorRepr::OC(m) => TwistGenerator::TensorOC(m),
            GeneratorRepr::Sh(n) => TwistGenerator::Shift(n),
        })
    }
}

impl Serialize for TwistWord {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.gens.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for TwistWord {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        Ok(TwistWord::new(Vec::deserialize(de)?))
    }
}

impl Serialize for GroupWord {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GroupWord {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(D::Error::custom)
    }
}

impl Serialize for NumCollection {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.classes().serialize(ser)
    }
}

pub fn parse_pic(json: &str, surface: Surface) -> Result<PicClass> {
    let [a, b]: [i64; 2] = serde_json::from_str(json)?;
    Ok(PicClass::new(surface, a, b))
}

pub fn pic_to_json(d: &PicClass) -> String {
    format!("[{},{}]", d.a, d.b)
}

pub fn parse_kclass(json: &str) -> Result<KClass> {
    Ok(serde_json::from_str(json)?)
}

/// Parses a collection and checks exceptionality and semiorthogonality.
pub fn parse_collection(json: &str) -> Result<NumCollection> {
    let classes: Vec<KClass> = serde_json::from_str(json)?;
    NumCollection::new(classes)
}

pub fn parse_twist_word(json: &str) -> Result<TwistWord> {
    Ok(serde_json::from_str(json)?)
}

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::mutation::standard_collection;

    #[test]
    fn kclass_schema() {
        let v = parse_kclass(r#"{"surface":"sigma2","rank":1,"c1":[0,1],"chi":2}"#).unwrap();
        assert_eq!(v, KClass::new(1, PicClass::fibre(), 2));
        assert_eq!(to_json(&v), r#"{"surface":"sigma2","rank":1,"c1":[0,1],"chi":2}"#);
        assert!(parse_kclass(r#"{"surface":"p2","rank":1,"c1":[0,1],"chi":2}"#).is_err());
        assert!(parse_kclass(r#"{"surface":"sigma2","rank":1,"c1":[0],"chi":2}"#).is_err());
        assert!(parse_kclass(r#"{"surface":"sigma2","rank":1,"c1":[0,1]}"#).is_err());
    }

    #[test]
    fn standard_collection_parses() {
        let std = standard_collection(Surface::Sigma2);
        let parsed = parse_collection(&to_json(&std)).unwrap();
        assert_eq!(parsed, std);
    }

    #[test]
    fn collection_rejections() {
        let o = r#"{"surface":"sigma2","rank":1,"c1":[0,0],"chi":1}"#;
        let of = r#"{"surface":"sigma2","rank":1,"c1":[0,1],"chi":2}"#;
        let err = parse_collection(&format!("[{of},{o}]")).unwrap_err();
        assert_eq!(err, Error::NotSemiorthogonal { i: 1, j: 2, value: 2 });

        let rank0 = r#"{"surface":"sigma2","rank":0,"c1":[1,0],"chi":1}"#;
        assert!(matches!(parse_collection(&format!("[{rank0}]")), Err(Error::NotExceptional { .. })));
    }

    #[test]
    fn twist_word_schema() {
        let w = parse_twist_word(r#"[{"T":0},{"Ti":1},{"OC":1},{"Sh":1}]"#).unwrap();
        assert_eq!(
            w.gens,
            vec![
                TwistGenerator::Twist(0, Sign::Plus),
                TwistGenerator::Twist(1, Sign::Minus),
                TwistGenerator::TensorOC(1),
                TwistGenerator::Shift(1)
            ]
        );
        assert_eq!(to_json(&w), r#"[{"T":0},{"Ti":1},{"OC":1},{"Sh":1}]"#);
        assert!(parse_twist_word(r#"[{"X":0}]"#).is_err());
    }

    #[test]
    fn pic_schema() {
        assert_eq!(parse_pic("[1,3]", Surface::Sigma2).unwrap(), PicClass::new(Surface::Sigma2, 1, 3));
        assert_eq!(pic_to_json(&PicClass::new(Surface::Quadric, -2, 5)), "[-2,5]");
    }
}
