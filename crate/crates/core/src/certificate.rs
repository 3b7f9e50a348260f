//! The JSON certificate format.
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "kind": "complete",
//!   "m": 9,
//!   "n": 0,
//!   "blocks": [
//!     [0, 1, 2, 3, 4, 5],
//!     ...
//!   ]
//! }
//! ```
//!
//! `kind` is `"complete"` for `K_m` (then `n = 0`) and `"hole"` for
//! `K_m \ K_n`. Cyclic points are the ids `0..m-n` and the hole the top `n`
//! ids, so shifting a complete certificate of order `n` up by `m - n` and
//! appending it to a hole certificate gives a complete one of order `m`.
//! Generator outputs whose difference set is not all of `[1, ⌊u/2⌋]` carry it
//! in an extra `differences` field.
//!
//! Written certificates are canonical: each block in its smallest listing,
//! blocks sorted, fixed field order, one block per line.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::design::HoleGraph;
use crate::error::{Error, Result};
use crate::lemmas::LemmaOutput;
use crate::verify::{Block, Decomposition, VerificationReport};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Complete,
    Hole,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub format_version: u32,
    pub kind: Kind,
    pub m: u32,
    pub n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub differences: Option<Vec<u32>>,
    pub blocks: Vec<Block>,
}

impl Certificate {
    pub fn from_decomposition(d: &Decomposition) -> Certificate {
        let d = d.canonicalized();
        Certificate {
            format_version: FORMAT_VERSION,
            kind: if d.hole == 0 {
                Kind::Complete
            } else {
                Kind::Hole
            },
            m: d.m,
            n: d.hole,
            differences: None,
            blocks: d.blocks,
        }
    }

    /// A certificate for a generator output over `<Z_u ∪ {∞_1..∞_t}, D>`.
    pub fn from_lemma(out: &LemmaOutput) -> Certificate {
        let (u, t) = (out.graph.u(), out.graph.t());
        let mut c = Certificate::from_decomposition(&Decomposition::from_suns(u, t, &out.blocks));
        c.kind = Kind::Hole;
        if out.graph.differences() != HoleGraph::full(u, t).differences() {
            c.differences = Some(out.graph.differences().iter().copied().collect());
        }
        c
    }

    pub fn decomposition(&self) -> Decomposition {
        Decomposition {
            m: self.m,
            hole: self.n,
            blocks: self.blocks.clone(),
        }
    }

    /// The graph the blocks must partition.
    pub fn target(&self) -> Result<HoleGraph> {
        let u = self.m - self.n;
        match &self.differences {
            None => Ok(HoleGraph::full(u, self.n)),
            Some(ds) if ds.is_empty() => Ok(HoleGraph::edgeless(u)),
            Some(ds) => HoleGraph::new(u, self.n, ds.iter().copied()),
        }
    }

    pub fn verify(&self) -> Result<VerificationReport> {
        Ok(self.decomposition().verify_against(&self.target()?))
    }

    /// Canonical JSON text, newline terminated.
    pub fn to_json(&self) -> String {
        let mut blocks: Vec<Block> = self
            .blocks
            .iter()
            .map(crate::verify::canonical_block)
            .collect();
        blocks.sort_unstable();
        let kind = match self.kind {
            Kind::Complete => "complete",
            Kind::Hole => "hole",
        };
        let mut s = String::new();
        s.push_str("{\n");
        let _ = writeln!(s, "  \"format_version\": {},", self.format_version);
        let _ = writeln!(s, "  \"kind\": \"{kind}\",");
        let _ = writeln!(s, "  \"m\": {},", self.m);
        let _ = writeln!(s, "  \"n\": {},", self.n);
        if let Some(ds) = &self.differences {
            let list: Vec<String> = ds.iter().map(u32::to_string).collect();
            let _ = writeln!(s, "  \"differences\": [{}],", list.join(", "));
        }
        if blocks.is_empty() {
            s.push_str("  \"blocks\": []\n");
        } else {
            s.push_str("  \"blocks\": [\n");
            for (i, b) in blocks.iter().enumerate() {
                let sep = if i + 1 == blocks.len() { "" } else { "," };
                let _ = writeln!(
                    s,
                    "    [{}, {}, {}, {}, {}, {}]{sep}",
                    b[0], b[1], b[2], b[3], b[4], b[5]
                );
            }
            s.push_str("  ]\n");
        }
        s.push_str("}\n");
        s
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        let c: Certificate =
            serde_json::from_str(text).map_err(|e| Error::Certificate(e.to_string()))?;
        if c.format_version != FORMAT_VERSION {
            return Err(Error::Certificate(format!(
                "unsupported format_version {}",
                c.format_version
            )));
        }
        if c.n > c.m {
            return Err(Error::Certificate(format!(
                "hole size {} exceeds m = {}",
                c.n, c.m
            )));
        }
        if c.kind == Kind::Complete && (c.n != 0 || c.differences.is_some()) {
            return Err(Error::Certificate(
                "a complete certificate has n = 0 and no differences".into(),
            ));
        }
        Ok(c)
    }
}
