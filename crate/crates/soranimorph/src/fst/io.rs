//! Versioned binary grammar format.
//!
//! Layout: magic `CKM1`, format version, schema version, interned symbol
//! table in canonical order, state/final/arc arrays, CRC-32 trailer. A file
//! emitted twice from the same machine is byte-identical.

use std::io::{Read, Write};

use thiserror::Error;

use super::symbol::{Flag, FlagOp, SymId, Symbol, SymbolTable};
use super::transducer::{Arc, StateId, Transducer};

pub const MAGIC: &[u8; 4] = b"CKM1";
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),
    #[error("corrupt grammar file: {0}")]
    CorruptFile(String),
    #[error("grammar version mismatch: file has format {file_format}, schema {file_schema}; expected format {expect_format}, schema {expect_schema}")]
    VersionMismatch {
        file_format: u32,
        file_schema: u32,
        expect_format: u32,
        expect_schema: u32,
    },
}

fn crc32(data: &[u8]) -> u32 {
    let mut table = [0u32; 256];
    for (i, slot) in table.iter_mut().enumerate() {
        let mut c = i as u32;
        for _ in 0..8 {
            c = if c & 1 != 0 { 0xEDB8_8320 ^ (c >> 1) } else { c >> 1 };
        }
        *slot = c;
    }
    let mut crc = 0xFFFF_FFFFu32;
    for &b in data {
        crc = table[((crc ^ b as u32) & 0xFF) as usize] ^ (crc >> 8);
    }
    crc ^ 0xFFFF_FFFF
}

struct Buf(Vec<u8>);

impl Buf {
    fn u32(&mut self, v: u32) {
        self.0.extend_from_slice(&v.to_le_bytes());
    }
    fn str(&mut self, s: &str) {
        self.u32(s.len() as u32);
        self.0.extend_from_slice(s.as_bytes());
    }
    fn u8(&mut self, v: u8) {
        self.0.push(v);
    }
}

fn write_symbol(buf: &mut Buf, sym: &Symbol) {
    match sym {
        Symbol::Epsilon => buf.u8(0),
        Symbol::Zero => buf.u8(1),
        Symbol::Other => buf.u8(2),
        Symbol::Grapheme(s) => {
            buf.u8(3);
            buf.str(s);
        }
        Symbol::Tag(s) => {
            buf.u8(4);
            buf.str(s);
        }
        Symbol::Flag(f) => {
            buf.u8(5);
            buf.u8(f.op.letter() as u8);
            buf.str(&f.feature);
            match &f.value {
                Some(v) => {
                    buf.u8(1);
                    buf.str(v);
                }
                None => buf.u8(0),
            }
        }
    }
}

/// Serializes in canonical form with the given schema version.
pub fn to_bytes(t: &Transducer, schema_version: u32) -> Vec<u8> {
    let t = t.compact();
    let mut buf = Buf(Vec::new());
    buf.0.extend_from_slice(MAGIC);
    buf.u32(FORMAT_VERSION);
    buf.u32(schema_version);
    buf.u32(t.table().len() as u32);
    for (_, sym) in t.table().iter() {
        write_symbol(&mut buf, sym);
    }
    buf.u32(t.num_states() as u32);
    buf.u32(t.start());
    for s in 0..t.num_states() as StateId {
        buf.u8(t.is_final(s) as u8);
        let arcs = t.arcs_from(s);
        buf.u32(arcs.len() as u32);
        for a in arcs {
            buf.u32(a.input.0);
            buf.u32(a.output.0);
            buf.u32(a.target);
        }
    }
    let crc = crc32(&buf.0);
    buf.u32(crc);
    buf.0
}

pub fn write_to<W: Write>(t: &Transducer, schema_version: u32, mut w: W) -> Result<(), IoError> {
    w.write_all(&to_bytes(t, schema_version))?;
    Ok(())
}

struct Cursor<'a> {
    data: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn u32(&mut self) -> Result<u32, IoError> {
        if self.pos + 4 > self.data.len() {
            return Err(IoError::CorruptFile("truncated".into()));
        }
        let v = u32::from_le_bytes(self.data[self.pos..self.pos + 4].try_into().unwrap());
        self.pos += 4;
        Ok(v)
    }
    fn u8(&mut self) -> Result<u8, IoError> {
        if self.pos >= self.data.len() {
            return Err(IoError::CorruptFile("truncated".into()));
        }
        let v = self.data[self.pos];
        self.pos += 1;
        Ok(v)
    }
    fn str(&mut self) -> Result<String, IoError> {
        let len = self.u32()? as usize;
        if self.pos + len > self.data.len() {
            return Err(IoError::CorruptFile("truncated string".into()));
        }
        let s = std::str::from_utf8(&self.data[self.pos..self.pos + len])
            .map_err(|_| IoError::CorruptFile("invalid utf-8".into()))?
            .to_string();
        self.pos += len;
        Ok(s)
    }
}

fn read_symbol(c: &mut Cursor) -> Result<Symbol, IoError> {
    Ok(match c.u8()? {
        0 => Symbol::Epsilon,
        1 => Symbol::Zero,
        2 => Symbol::Other,
        3 => Symbol::Grapheme(c.str()?),
        4 => Symbol::Tag(c.str()?),
        5 => {
            let op = match c.u8()? as char {
                'U' => FlagOp::Unify,
                'R' => FlagOp::Require,
                'D' => FlagOp::Disallow,
                'P' => FlagOp::Positive,
                'C' => FlagOp::Clear,
                'N' => FlagOp::Negative,
                other => {
                    return Err(IoError::CorruptFile(format!("bad flag op {other:?}")))
                }
            };
            let feature = c.str()?;
            let value = if c.u8()? == 1 { Some(c.str()?) } else { None };
            Symbol::Flag(Flag { op, feature, value })
        }
        k => return Err(IoError::CorruptFile(format!("bad symbol kind {k}"))),
    })
}

/// Parses a grammar file, checking magic, versions and checksum.
/// Returns the machine and its schema version.
pub fn from_bytes(data: &[u8], expect_schema: u32) -> Result<(Transducer, u32), IoError> {
    if data.len() < 8 || &data[0..4] != MAGIC {
        return Err(IoError::CorruptFile("bad magic".into()));
    }
    if data.len() < 4 {
        return Err(IoError::CorruptFile("truncated".into()));
    }
    let body = &data[..data.len() - 4];
    let stored_crc =
        u32::from_le_bytes(data[data.len() - 4..].try_into().unwrap());
    if crc32(body) != stored_crc {
        return Err(IoError::CorruptFile("checksum mismatch".into()));
    }
    let mut c = Cursor { data: body, pos: 4 };
    let file_format = c.u32()?;
    let file_schema = c.u32()?;
    if file_format != FORMAT_VERSION || file_schema != expect_schema {
        return Err(IoError::VersionMismatch {
            file_format,
            file_schema,
            expect_format: FORMAT_VERSION,
            expect_schema,
        });
    }
    let nsyms = c.u32()? as usize;
    let mut table = SymbolTable::new();
    let mut ids: Vec<SymId> = Vec::with_capacity(nsyms);
    for _ in 0..nsyms {
        let sym = read_symbol(&mut c)?;
        ids.push(table.intern(sym));
    }
    let remap = |raw: u32| -> Result<SymId, IoError> {
        ids.get(raw as usize)
            .copied()
            .ok_or_else(|| IoError::CorruptFile(format!("symbol id {raw} out of range")))
    };
    let nstates = c.u32()? as usize;
    let start = c.u32()?;
    if start as usize >= nstates.max(1) {
        return Err(IoError::CorruptFile("start state out of range".into()));
    }
    let mut finals = vec![false; nstates];
    let mut arcs: Vec<Vec<Arc>> = vec![Vec::new(); nstates];
    for s in 0..nstates {
        finals[s] = c.u8()? != 0;
        let narcs = c.u32()? as usize;
        for _ in 0..narcs {
            let input = remap(c.u32()?)?;
            let output = remap(c.u32()?)?;
            let target = c.u32()?;
            if target as usize >= nstates {
                return Err(IoError::CorruptFile("arc target out of range".into()));
            }
            arcs[s].push(Arc { input, output, target });
        }
    }
    Ok((Transducer::from_parts(table, start, finals, arcs), file_schema))
}

pub fn read_from<R: Read>(mut r: R, expect_schema: u32) -> Result<(Transducer, u32), IoError> {
    let mut data = Vec::new();
    r.read_to_end(&mut data)?;
    from_bytes(&data, expect_schema)
}
