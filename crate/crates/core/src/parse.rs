//! Text grammar for scalars, weights, sets, Borel descriptors, ideals and
//! limit modules.  Every Display form in this crate parses back to an
//! equal value.

use crate::borel::{Block, BorelDescriptor};
use crate::error::{Error, Result};
use crate::limits::{Algebra, IdealLabel, IntSeq, LimitKind, LimitModuleDescriptor};
use crate::scalar::ExtScalar;
use crate::setdesc::SetDescriptor;
use crate::weight::{Partition, Weight, WeightSeq};
use std::collections::BTreeSet;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.to_string() })
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(' ') {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.err(&format!("expected `{}`", tok))
        }
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let digits: String = self.rest().chars().take_while(|c| c.is_ascii_digit()).collect();
        if digits.is_empty() {
            return self.err("expected a number");
        }
        self.pos += digits.len();
        digits.parse().map_err(|_| Error::Parse {
            pos: self.pos,
            msg: "number out of range".into(),
        })
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.eat("-");
        let v = self.uint()? as i64;
        Ok(if neg { -v } else { v })
    }

    fn scalar(&mut self) -> Result<ExtScalar> {
        let neg = self.eat("-");
        let s = if self.eat("g") {
            let tag = self.uint()? as u32;
            let mut v = ExtScalar::generic(tag);
            if neg {
                v = v.checked_neg();
            }
            if self.eat("+") {
                v = v.add_int(self.uint()? as i64);
            } else if self.peek() == Some('-') {
                v = v.add_int(self.int()?);
            }
            return Ok(v);
        } else {
            let n = self.uint()? as i64;
            if self.eat("/") {
                ExtScalar::ratio(n, self.uint()? as i64)
            } else {
                ExtScalar::int(n)
            }
        };
        Ok(if neg { s.checked_neg() } else { s })
    }

    fn scalar_list(&mut self) -> Result<Vec<ExtScalar>> {
        let mut out = Vec::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '-' || c == 'g') {
            out.push(self.scalar()?);
            if !self.eat(",") {
                break;
            }
        }
        Ok(out)
    }

    fn uint_list(&mut self) -> Result<Vec<u64>> {
        let mut out = Vec::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            out.push(self.uint()?);
            if !self.eat(",") {
                break;
            }
        }
        Ok(out)
    }

    fn set(&mut self) -> Result<SetDescriptor> {
        if self.eat("odds") {
            return Ok(SetDescriptor::odds());
        }
        if self.eat("evens") {
            return Ok(SetDescriptor::evens());
        }
        if self.eat("all") {
            return Ok(SetDescriptor::all());
        }
        if self.eat("empty") {
            return Ok(SetDescriptor::empty());
        }
        self.expect("{")?;
        for (name, v) in [
            ("odds}", SetDescriptor::odds()),
            ("evens}", SetDescriptor::evens()),
            ("all}", SetDescriptor::all()),
        ] {
            if self.eat(name) {
                return Ok(v);
            }
        }
        let first = self.uint_list()?;
        if self.eat("}") {
            return Ok(SetDescriptor::from_finite(first));
        }
        self.expect(";")?;
        let exc_in: BTreeSet<u64> = first.into_iter().collect();
        let mut exc_out = BTreeSet::new();
        if self.eat("out=") {
            exc_out = self.uint_list()?.into_iter().collect();
            self.expect(",")?;
        }
        self.expect("period=")?;
        let period = self.uint()? as usize;
        self.expect(",")?;
        self.expect("pattern=")?;
        self.skip_ws();
        let bits: String = self.rest().chars().take_while(|&c| c == '0' || c == '1').collect();
        if bits.len() != period {
            return self.err("pattern length must equal the period");
        }
        self.pos += bits.len();
        self.expect(",")?;
        self.expect("start=")?;
        let start = self.uint()?;
        self.expect("}")?;
        Ok(SetDescriptor::new(
            exc_in,
            exc_out,
            start,
            bits.chars().map(|c| c == '1').collect(),
        ))
    }

    fn weight_seq(&mut self) -> Result<WeightSeq> {
        self.expect("[")?;
        let prefix = self.scalar_list()?;
        self.expect(";")?;
        self.expect("tail=")?;
        let tail = if self.eat("(") {
            let t = self.scalar_list()?;
            self.expect(")")?;
            t
        } else {
            vec![self.scalar()?]
        };
        self.expect("]")?;
        if tail.is_empty() {
            return self.err("tail block must be nonempty");
        }
        Ok(WeightSeq::new(prefix, tail))
    }

    fn int_seq(&mut self) -> Result<IntSeq> {
        self.expect("seq[")?;
        let prefix = self.uint_list()?;
        self.expect(";")?;
        self.expect("+(")?;
        let inc = self.uint_list()?;
        self.expect(")")?;
        self.expect("]")?;
        IntSeq::new(prefix, inc)
    }

    fn partition(&mut self) -> Result<Partition> {
        self.expect("[")?;
        let parts = self.uint_list()?;
        self.expect("]")?;
        Partition::new(parts)
    }

    fn block(&mut self) -> Result<Block> {
        if self.eat("asc") {
            return Ok(Block::Ascending(self.set()?));
        }
        if self.eat("desc") {
            return Ok(Block::Descending(self.set()?));
        }
        if self.eat("dense") {
            return Ok(Block::Dense(self.set()?));
        }
        let v = self.uint_list()?;
        if v.is_empty() {
            return self.err("expected a block");
        }
        Ok(Block::Explicit(v))
    }

    fn borel(&mut self) -> Result<BorelDescriptor> {
        let _ = self.eat("blocks=");
        self.expect("[")?;
        let mut blocks = vec![self.block()?];
        while self.eat(";") {
            blocks.push(self.block()?);
        }
        self.expect("]")?;
        let sign = if self.eat("sign=+") {
            Some(self.set()?)
        } else {
            None
        };
        BorelDescriptor::new(blocks, sign)
    }

    fn ideal(&mut self) -> Result<IdealLabel> {
        for (name, label) in [
            ("Isw", IdealLabel::Isw),
            ("Zero", IdealLabel::Zero),
            ("OSpinorIdeal", IdealLabel::OSpinorIdeal),
            ("OAnnV", IdealLabel::OAnnV),
            ("SpAnnV", IdealLabel::SpAnnV),
            ("Augmentation", IdealLabel::Augmentation),
        ] {
            if self.eat(name) {
                return Ok(label);
            }
        }
        self.expect("I(")?;
        let x = self.uint()?;
        self.expect(",")?;
        let y = self.uint()?;
        self.expect(";")?;
        let lam = self.partition()?;
        self.expect(";")?;
        let mu = self.partition()?;
        self.expect(")")?;
        Ok(IdealLabel::Ixy { x, y, lam, mu })
    }

    fn module(&mut self, alg: Algebra) -> Result<LimitModuleDescriptor> {
        let kind = if self.eat("C") {
            LimitKind::Trivial
        } else if self.eat("V*") {
            LimitKind::Conatural
        } else if self.eat("V") {
            LimitKind::Natural
        } else if self.eat("Lambda") {
            LimitKind::SemiInfExterior(self.set()?)
        } else if self.eat("SinfV*(") {
            let a = self.int_seq()?;
            self.expect(")")?;
            LimitKind::SInfVStar(a)
        } else if self.eat("SinfV(") {
            let a = self.int_seq()?;
            self.expect(")")?;
            LimitKind::SInfV(a)
        } else if self.eat("SV*") {
            LimitKind::SPartVStar(self.partition()?)
        } else if self.eat("SV") {
            LimitKind::SPartV(self.partition()?)
        } else if self.eat("XSl") {
            LimitKind::XSlInf(self.weight_seq()?)
        } else if self.eat("XSp") {
            LimitKind::XSpInf(self.weight_seq()?)
        } else if self.eat("SpinB") {
            LimitKind::SpinorB(self.set()?)
        } else if self.eat("SpinD") {
            LimitKind::SpinorD(self.set()?)
        } else {
            return self.err("expected a module descriptor");
        };
        LimitModuleDescriptor::new(alg, kind)
    }

    fn end(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos != self.src.len() {
            return self.err("trailing input");
        }
        Ok(())
    }
}

fn complete<T>(src: &str, f: impl FnOnce(&mut Cursor) -> Result<T>) -> Result<T> {
    let mut c = Cursor::new(src);
    let v = f(&mut c)?;
    c.end()?;
    Ok(v)
}

pub fn parse_scalar(src: &str) -> Result<ExtScalar> {
    complete(src, |c| c.scalar())
}

/// Comma-separated scalars, e.g. `2,1,0`.
pub fn parse_weight(src: &str) -> Result<Weight> {
    let entries = complete(src, |c| {
        let wrapped = c.peek() == Some('(');
        if wrapped {
            c.expect("(")?;
        }
        let entries = c.scalar_list()?;
        if wrapped {
            c.expect(")")?;
        }
        Ok(entries)
    })?;
    if entries.is_empty() {
        return Err(Error::Parse { pos: 0, msg: "empty weight".into() });
    }
    Ok(Weight::new(entries))
}

pub fn parse_weight_seq(src: &str) -> Result<WeightSeq> {
    complete(src, |c| c.weight_seq())
}

pub fn parse_set(src: &str) -> Result<SetDescriptor> {
    complete(src, |c| c.set())
}

pub fn parse_partition(src: &str) -> Result<Partition> {
    complete(src, |c| c.partition())
}

pub fn parse_borel(src: &str) -> Result<BorelDescriptor> {
    complete(src, |c| c.borel())
}

pub fn parse_ideal(src: &str) -> Result<IdealLabel> {
    complete(src, |c| c.ideal())
}

pub fn parse_int_seq(src: &str) -> Result<IntSeq> {
    complete(src, |c| c.int_seq())
}

pub fn parse_module(src: &str, alg: Algebra) -> Result<LimitModuleDescriptor> {
    complete(src, |c| c.module(alg))
}

pub fn parse_algebra(src: &str) -> Result<Algebra> {
    match src {
        "sl" => Ok(Algebra::Sl),
        "o-b" => Ok(Algebra::OB),
        "o-d" => Ok(Algebra::OD),
        "sp" => Ok(Algebra::Sp),
        _ => Err(Error::Parse { pos: 0, msg: format!("unknown algebra `{}`", src) }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("3/2").unwrap(), ExtScalar::ratio(3, 2));
        assert_eq!(parse_scalar("-7").unwrap(), ExtScalar::int(-7));
        assert_eq!(parse_scalar("g0+2").unwrap(), ExtScalar::generic_shift(0, 2));
        assert_eq!(parse_scalar("-g1-3").unwrap(), ExtScalar::generic(1).checked_neg().add_int(-3));
        assert!(matches!(parse_scalar("3//2"), Err(Error::Parse { .. })));
    }

    #[test]
    fn sequences_and_sets() {
        let s = parse_weight_seq("[1,2,g0; tail=-1]").unwrap();
        assert_eq!(*s.entry(3), ExtScalar::generic(0));
        assert_eq!(*s.entry(9), ExtScalar::int(-1));
        let s = parse_weight_seq("[; tail=(1,0)]").unwrap();
        assert_eq!(*s.entry(4), ExtScalar::int(0));

        let d = parse_set("{1,3; period=2, pattern=10, start=5}").unwrap();
        let up: Vec<u64> = (1..=9).filter(|&i| d.member(i)).collect();
        assert_eq!(up, vec![1, 3, 5, 7, 9]);
        assert!(parse_set("odds").unwrap().set_eq(&SetDescriptor::odds()));
        assert!(parse_set("{2,9}").unwrap().is_finite());
    }

    #[test]
    fn borels_and_ideals() {
        let b = parse_borel("[asc{odds}; desc{evens}]").unwrap();
        assert!(b.precedes(5, 6).unwrap());
        assert!(b.sign.is_none());
        let b = parse_borel("blocks=[1,2,3; dense{4; period=1, pattern=1, start=4}] sign=+{2}")
            .unwrap();
        assert_eq!(b.sigma(2).unwrap(), 1);
        assert_eq!(b.sigma(3).unwrap(), -1);

        assert_eq!(
            parse_ideal("I(0,1;[];[])").unwrap().to_string(),
            "I(0,1;[];[])"
        );
        assert_eq!(parse_ideal("Isw").unwrap(), IdealLabel::Isw);
        assert_eq!(
            parse_ideal("I(0,0;[2,1];[])").unwrap(),
            IdealLabel::Ixy {
                x: 0,
                y: 0,
                lam: Partition::new(vec![2, 1]).unwrap(),
                mu: Partition::default()
            }
        );
    }

    #[test]
    fn display_round_trips() {
        for src in [
            "[1,2,g0; tail=-1]",
            "[-1/2,g3+4; tail=(0,-1)]",
            "[; tail=0]",
        ] {
            let v = parse_weight_seq(src).unwrap();
            assert_eq!(parse_weight_seq(&v.to_string()).unwrap(), v);
        }
        for src in ["{2,9}", "{}", "{1,3; period=2, pattern=10, start=5}"] {
            let v = parse_set(src).unwrap();
            assert!(parse_set(&v.to_string()).unwrap().set_eq(&v));
        }
        for src in ["I(1,0;[];[])", "I(0,0;[3,1];[2])", "OSpinorIdeal"] {
            let v = parse_ideal(src).unwrap();
            assert_eq!(parse_ideal(&v.to_string()).unwrap(), v);
        }
        let b = parse_borel("[asc{odds}; desc{evens}] sign=+{2,4}").unwrap();
        let again = parse_borel(&b.to_string()).unwrap();
        assert_eq!(again.to_string(), b.to_string());
    }

    #[test]
    fn module_round_trips() {
        use crate::limits::Algebra::*;
        for (alg, src) in [
            (Sl, "C"),
            (Sl, "V"),
            (Sl, "V*"),
            (Sl, "Lambda{1; period=2, pattern=10, start=3}"),
            (Sl, "SinfV(seq[1,5; +(2,1)])"),
            (Sl, "SinfV*(seq[; +(1)])"),
            (Sl, "SV[2,1]"),
            (Sl, "SV*[3]"),
            (Sl, "XSl[1,2,g0; tail=-1]"),
            (Sp, "XSp[; tail=0]"),
            (OB, "SpinB{; period=2, pattern=10, start=1}"),
            (OD, "SpinD{; period=2, pattern=10, start=1}"),
        ] {
            let m = parse_module(src, alg).unwrap();
            assert_eq!(parse_module(&m.to_string(), alg).unwrap(), m, "{}", src);
        }
        assert!(parse_module("SpinB{1}", Algebra::Sl).is_err());
    }
}
