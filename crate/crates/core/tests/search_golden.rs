//! Search results in enumeration order, frozen in `golden/searches.txt`.
//! `BIHOMEGA_BLESS=1` rewrites the file.

use std::fmt::Write;
use std::path::Path;

use bihomega_core::algebra::LinearFamily;
use bihomega_core::forge::{brute_force_rb_search, corpus, make_endomorphism_pairs, SearchConfig};
use bihomega_core::linalg::{format_rational, int};

fn family(f: &LinearFamily) -> String {
    f.maps().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn transcript() -> String {
    let corpus = corpus();
    let get = |name: &str| &corpus.iter().find(|e| e.name == name).unwrap().instance;
    let mut out = String::new();
    for name in ["dual-T", "affine-T", "dual-C2"] {
        let pairs = make_endomorphism_pairs(get(name), &SearchConfig::default()).unwrap();
        writeln!(out, "endomorphism pairs of {name}: {}", pairs.len()).unwrap();
        for (p, q) in pairs {
            writeln!(out, "  {} | {}", family(&p), family(&q)).unwrap();
        }
    }
    for (name, w) in [("affine-T", 0), ("affine-T", 1), ("dual-T", -1), ("upper-T", 1)] {
        let found = brute_force_rb_search(get(name), &SearchConfig::with_weight(int(w))).unwrap();
        writeln!(out, "rota-baxter families of {name} at weight {}: {}", format_rational(&int(w)), found.len()).unwrap();
        for r in found {
            writeln!(out, "  {}", family(&r.maps)).unwrap();
        }
    }
    out
}

#[test]
fn searches_match_frozen_transcript() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/searches.txt");
    let got = transcript();
    if std::env::var_os("BIHOMEGA_BLESS").is_some() {
        std::fs::write(&path, &got).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path).expect("frozen transcript");
    assert!(got == want, "search output changed:\n{got}");
}
