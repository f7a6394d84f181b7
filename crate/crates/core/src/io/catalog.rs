//! JSON-lines catalogs: one record per line, fields in a fixed order.

use std::io::{self, BufRead, Write};

use crate::enumerate::CatalogRecord;

pub fn write_catalog<'a, W: Write>(mut w: W, records: impl IntoIterator<Item = &'a CatalogRecord>) -> io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut w, r)?;
        w.write_all(b"\n")?;
    }
    w.flush()
}

/// Reads a catalog back; errors name the offending 1-based line.
pub fn read_catalog<R: BufRead>(r: R) -> io::Result<Vec<CatalogRecord>> {
    let mut out = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec = serde_json::from_str(&line)
            .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, format!("line {}: {e}", i + 1)))?;
        out.push(rec);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::enumerate::{complete_to_residuated, enumerate_skeletons};

    #[test]
    fn records_round_trip_with_fixed_key_order() {
        let recs: Vec<CatalogRecord> = enumerate_skeletons(4)
            .iter()
            .flat_map(complete_to_residuated)
            .map(|a| CatalogRecord::describe(&a, &canonical_form(&a)))
            .collect();
        let mut buf = Vec::new();
        write_catalog(&mut buf, &recs).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        let first = text.lines().next().unwrap();
        let keys = [
            "\"size\"",
            "\"canonical_key\"",
            "\"flags\"",
            "\"filter_count\"",
            "\"max_filter_count\"",
            "\"radical_size\"",
            "\"graph\"",
        ];
        let pos: Vec<usize> = keys.iter().map(|k| first.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert!(first.contains("\"girth\":\"inf\""));
        assert_eq!(read_catalog(&buf[..]).unwrap(), recs);
    }

    #[test]
    fn bad_line_is_reported() {
        let err = read_catalog(&b"\n{\"size\": 1}\n"[..]).unwrap_err();
        assert!(err.to_string().starts_with("line 2:"));
    }
}
