use galois_core::algebra::*;
use galois_core::axioms::check_axioms_c;
use galois_core::axioms_g::check_axioms_g;
use galois_core::category::*;
use galois_core::Caps;
use std::sync::Arc;
use std::time::Instant;

fn main() {
    let caps = Caps::default();
    for (name, g) in [
        ("C2", cyclic(2)),
        ("C3", cyclic(3)),
        ("C4", cyclic(4)),
        ("V4", klein_four()),
        ("S3", symmetric(3)),
        ("D4", dihedral(4)),
        ("Q8", quaternion()),
        ("A4", alternating(4)),
    ] {
        let g = Arc::new(g);
        let t = Instant::now();
        let built = build_gset_category(&g, g.size(), &caps).unwrap();
        let c = &built.category;
        let build_t = t.elapsed();
        let t = Instant::now();
        let report = check_axioms_g(c, &caps).unwrap();
        let g_t = t.elapsed();
        let verdicts: Vec<String> = report
            .checks
            .iter()
            .map(|ch| {
                format!(
                    "{}:{}({}/{})",
                    ch.axiom,
                    if ch.passed { "ok" } else { "FAIL" },
                    ch.checked,
                    ch.skipped
                )
            })
            .collect();
        println!(
            "{name}: objects={} arrows={} complete={} build={:?} gsuite={:?}\n    {}",
            c.objects().len(),
            c.arrows().len(),
            c.complete_upto,
            build_t,
            g_t,
            verdicts.join(" ")
        );
        if let Some(w) = report.checks.iter().find_map(|ch| ch.witness.as_ref()) {
            println!("    witness: {}", w.description);
        }
        // connected subcategory: C-suite
        let t = Instant::now();
        let tbuilt = build_transitive_gset_category(&g, g.size(), &caps).unwrap();
        let report = check_axioms_c(&tbuilt.category, &caps).unwrap();
        let c_t = t.elapsed();
        let verdicts: Vec<String> = report
            .checks
            .iter()
            .map(|ch| {
                format!(
                    "{}:{}({}/{})",
                    ch.axiom,
                    if ch.passed { "ok" } else { "FAIL" },
                    ch.checked,
                    ch.skipped
                )
            })
            .collect();
        println!("    connected: csuite={:?} {}", c_t, verdicts.join(" "));
        if let Some(w) = report.checks.iter().find_map(|ch| ch.witness.as_ref()) {
            println!("    witness: {}", w.description);
        }
    }
}
