//! Even-zigzag calibration: every even zigzag of length ≤ 8 in a window is
//! detected by exactly one rank-one differential, at the position that
//! `even_shape_for` inverts. The table is pinned by a golden file; set
//! `ZZ_BLESS=1` to regenerate it.

use std::path::PathBuf;

use serde_json::{json, Value};
use zz_core::bicomplex::{bd, make_zigzag, Arrow, ZigzagShape};
use zz_core::decomposition::even_shape_for;
use zz_core::functors::{differential_ranks, Sequence};

fn calibration_table() -> Value {
    let mut rows = Vec::new();
    for len in [2usize, 4, 6, 8] {
        for arrow in [Arrow::Horizontal, Arrow::Vertical] {
            for (p, q) in [(0, 0), (1, 2), (2, 1)] {
                let shape = ZigzagShape::zigzag(bd(p, q), len, arrow).unwrap();
                let a = make_zigzag(&shape).unwrap();
                let t = a.total();
                let mut hits = Vec::new();
                for which in [Sequence::Column, Sequence::Row] {
                    for ((pq, r), rank) in differential_ranks(&a, &t, which) {
                        hits.push((which, pq, r, rank));
                    }
                }
                assert_eq!(hits.len(), 1, "{}: {hits:?}", shape.describe());
                let (which, pq, r, rank) = hits[0];
                assert_eq!(rank, 1);
                assert_eq!(2 * r, len);
                assert_eq!(even_shape_for(which, pq, r), shape, "{}", shape.describe());
                rows.push(json!({
                    "shape": shape.describe(),
                    "sequence": format!("{which:?}").to_lowercase(),
                    "source": [pq.p, pq.q],
                    "page": r,
                }));
            }
        }
    }
    Value::Array(rows)
}

#[test]
fn even_zigzag_calibration_matches_golden() {
    let table = calibration_table();
    let text = serde_json::to_string_pretty(&table).unwrap() + "\n";
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/even_zigzag_calibration.json");
    if std::env::var("ZZ_BLESS").is_ok_and(|v| v == "1") {
        std::fs::write(&path, &text).unwrap();
    }
    let golden = std::fs::read_to_string(&path).expect("golden file present; run with ZZ_BLESS=1 to create it");
    assert_eq!(text, golden);
}
