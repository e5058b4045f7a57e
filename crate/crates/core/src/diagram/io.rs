use serde::{Deserialize, Serialize};

use super::{ArcId, Diagram};
use crate::error::DiagramError;

/// `{"crossings": [[a,b,c,d], ...], "free_loops": k}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub crossings: Vec<[ArcId; 4]>,
    #[serde(default)]
    pub free_loops: u32,
}

impl From<&Diagram> for DiagramJson {
    fn from(d: &Diagram) -> Self {
        DiagramJson { crossings: d.crossings().to_vec(), free_loops: d.free_loops() }
    }
}

impl TryFrom<DiagramJson> for Diagram {
    type Error = DiagramError;

    fn try_from(j: DiagramJson) -> Result<Self, Self::Error> {
        Diagram::from_pd(j.crossings, j.free_loops)
    }
}

impl Diagram {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(DiagramJson::from(self)).expect("plain data")
    }
}

/// Parses the PD text grammar: `X[a,b,c,d]` and `O` tokens separated by
/// whitespace or commas.
pub fn parse_pd(text: &str) -> Result<Diagram, DiagramError> {
    let (crossings, loops) = PdLexer { src: text.as_bytes(), pos: 0 }.run()?;
    Diagram::from_pd(crossings, loops)
}

/// Accepts either the PD text grammar or the JSON form.
pub fn parse_diagram(text: &str) -> Result<Diagram, DiagramError> {
    if text.trim_start().starts_with('{') {
        let j: DiagramJson = serde_json::from_str(text).map_err(|e| DiagramError::Json(e.to_string()))?;
        Diagram::try_from(j)
    } else {
        parse_pd(text)
    }
}

struct PdLexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl PdLexer<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, DiagramError> {
        Err(DiagramError::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn skip_separators(&mut self) {
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_whitespace() || self.src[self.pos] == b',') {
            self.pos += 1;
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), DiagramError> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn int(&mut self) -> Result<ArcId, DiagramError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an arc number");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .or_else(|_| self.err("arc number out of range"))
    }

    fn run(mut self) -> Result<(Vec<[ArcId; 4]>, u32), DiagramError> {
        let mut crossings = Vec::new();
        let mut loops = 0;
        loop {
            self.skip_separators();
            match self.src.get(self.pos) {
                None => break,
                Some(b'O') => {
                    self.pos += 1;
                    loops += 1;
                }
                Some(b'X') => {
                    self.pos += 1;
                    self.expect(b'[')?;
                    let mut x = [0; 4];
                    for (k, slot) in x.iter_mut().enumerate() {
                        if k > 0 {
                            self.expect(b',')?;
                        }
                        *slot = self.int()?;
                    }
                    self.expect(b']')?;
                    crossings.push(x);
                }
                Some(_) => return self.err("expected 'X[' or 'O'"),
            }
        }
        if crossings.is_empty() && loops == 0 {
            return Err(DiagramError::Empty);
        }
        Ok((crossings, loops))
    }
}
