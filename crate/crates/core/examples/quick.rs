use galois_core::algebra::*;
use galois_core::axioms_g::check_axioms_g;
use galois_core::category::*;
use galois_core::Caps;
use std::sync::Arc;
use std::time::Instant;

fn main() {
    let caps = Caps::default();
    let name = std::env::args().nth(1).unwrap_or_else(|| "C4".into());
    let g = match name.as_str() {
        "C2" => cyclic(2),
        "C3" => cyclic(3),
        "C4" => cyclic(4),
        "V4" => klein_four(),
        "S3" => symmetric(3),
        "D4" => dihedral(4),
        "Q8" => quaternion(),
        "A4" => alternating(4),
        _ => panic!(),
    };
    let g = Arc::new(g);
    let t = Instant::now();
    let built = build_gset_category(&g, g.size(), &caps).unwrap();
    let c = &built.category;
    println!("{name}: objects={} arrows={} built {:?}", c.objects().len(), c.arrows().len(), t.elapsed());
    let t = Instant::now();
    let report = check_axioms_g(c, &caps).unwrap();
    println!("gsuite {:?} passed={}", t.elapsed(), report.passed());
    for ch in &report.checks {
        println!("  {} {} checked={} skipped={} {}", ch.axiom, ch.passed, ch.checked, ch.skipped,
            ch.witness.as_ref().map(|w| w.description.clone()).unwrap_or_default());
    }
}
