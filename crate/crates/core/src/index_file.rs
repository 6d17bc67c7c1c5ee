//! Binary persistence for [`SumIndex`].
//!
//! Layout, all integers little-endian:
//!
//! ```text
//! header   magic "EQPWIDX1" (8) | n u16 | limit u32 | flags u16
//! count    u64 number of records
//! record   u32 len | sum as ASCII decimal (len bytes) | u32 pairs | pairs × (i64 x, i64 y)
//! ```
//!
//! `flags` bits 0–1 hold the component range (0 positive, 1 non-negative,
//! 2 signed); the remaining bits must be zero.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::oracle::{ComponentRange, Pair, SumIndex};
use crate::quadruple::Exponent;

pub const MAGIC: &[u8; 8] = b"EQPWIDX1";
pub const HEADER_LEN: usize = 16;

const RANGE_MASK: u16 = 0b11;

pub fn write_index<W: Write>(index: &SumIndex, mut w: W) -> Result<()> {
    w.write_all(MAGIC)?;
    w.write_all(&(index.n().value() as u16).to_le_bytes())?;
    w.write_all(&index.limit().to_le_bytes())?;
    w.write_all(&index.range().code().to_le_bytes())?;
    w.write_all(&(index.len() as u64).to_le_bytes())?;
    for (sum, pairs) in index.iter() {
        let digits = sum.to_string();
        w.write_all(&(digits.len() as u32).to_le_bytes())?;
        w.write_all(digits.as_bytes())?;
        w.write_all(&(pairs.len() as u32).to_le_bytes())?;
        for (x, y) in pairs {
            w.write_all(&x.to_le_bytes())?;
            w.write_all(&y.to_le_bytes())?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn to_bytes(index: &SumIndex) -> Vec<u8> {
    let mut buf = Vec::new();
    write_index(index, &mut buf).expect("writing to a Vec cannot fail");
    buf
}

fn bad(msg: impl Into<String>) -> Error {
    Error::IndexFormat(msg.into())
}

fn read_exact<const N: usize, R: Read>(r: &mut R) -> Result<[u8; N]> {
    let mut buf = [0u8; N];
    r.read_exact(&mut buf)
        .map_err(|e| bad(format!("truncated input: {e}")))?;
    Ok(buf)
}

/// Reads an index, validating the header and every record.
pub fn read_index<R: Read>(mut r: R) -> Result<SumIndex> {
    let magic: [u8; 8] = read_exact(&mut r)?;
    if &magic != MAGIC {
        return Err(bad("bad magic"));
    }
    let n = u16::from_le_bytes(read_exact(&mut r)?);
    let n = Exponent::try_from(u32::from(n)).map_err(|_| bad(format!("bad exponent {n}")))?;
    let limit = u32::from_le_bytes(read_exact(&mut r)?);
    let flags = u16::from_le_bytes(read_exact(&mut r)?);
    if flags & !RANGE_MASK != 0 {
        return Err(bad(format!("unknown flag bits {flags:#06x}")));
    }
    let range = ComponentRange::from_code(flags & RANGE_MASK)
        .ok_or_else(|| bad(format!("bad range code {}", flags & RANGE_MASK)))?;
    if limit == 0 {
        return Err(bad("limit is zero"));
    }

    let count = u64::from_le_bytes(read_exact(&mut r)?);
    let mut table: BTreeMap<i128, Vec<Pair>> = BTreeMap::new();
    let mut total = 0u64;
    let expected = range.pair_count(limit);
    for _ in 0..count {
        let len = u32::from_le_bytes(read_exact(&mut r)?) as usize;
        if len == 0 || len > 48 {
            return Err(bad(format!("sum length {len} out of range")));
        }
        let mut digits = vec![0u8; len];
        r.read_exact(&mut digits)
            .map_err(|e| bad(format!("truncated input: {e}")))?;
        let sum: i128 = std::str::from_utf8(&digits)
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| bad("sum is not a decimal integer"))?;
        if table.last_key_value().is_some_and(|(last, _)| *last >= sum) {
            return Err(bad("sums are not strictly ascending"));
        }
        let npairs = u32::from_le_bytes(read_exact(&mut r)?) as u64;
        total += npairs;
        if npairs == 0 || total > expected {
            return Err(bad("pair count does not match header"));
        }
        let mut pairs = Vec::with_capacity(npairs as usize);
        for _ in 0..npairs {
            let x = i64::from_le_bytes(read_exact(&mut r)?);
            let y = i64::from_le_bytes(read_exact(&mut r)?);
            if x > y || !range.contains(limit, x) || !range.contains(limit, y) {
                return Err(bad(format!("pair ({x}, {y}) outside the declared range")));
            }
            if n.pow_i128(x) + n.pow_i128(y) != sum {
                return Err(bad(format!("pair ({x}, {y}) does not sum to {sum}")));
            }
            if pairs.last().is_some_and(|last| *last >= (x, y)) {
                return Err(bad("pairs are not strictly ascending"));
            }
            pairs.push((x, y));
        }
        table.insert(sum, pairs);
    }
    if total != expected {
        return Err(bad(format!("expected {expected} pairs, found {total}")));
    }
    let mut trailing = [0u8; 1];
    if r.read(&mut trailing)? != 0 {
        return Err(bad("trailing bytes after last record"));
    }
    Ok(SumIndex::from_parts(n, limit, range, table))
}

pub fn save(index: &SumIndex, path: impl AsRef<Path>) -> Result<()> {
    write_index(index, BufWriter::new(File::create(path)?))
}

pub fn load(path: impl AsRef<Path>) -> Result<SumIndex> {
    read_index(BufReader::new(File::open(path)?))
}
