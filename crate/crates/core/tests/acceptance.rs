//! One line per acceptance criterion. Criterion 2 is expected to fail on a
//! documented class of mirror II instances; everything else must pass.

use std::io::Write;
use std::sync::Arc;

use ihall_core::hall::HallEngine;
use ihall_core::suite::{run_criterion, Scale, SuiteContext};

#[test]
fn acceptance() {
    let ctx = SuiteContext::new(Arc::new(HallEngine::new()), Scale::Full);
    let mut unexpected = Vec::new();
    for id in 1..=10 {
        let r = run_criterion(id, &ctx);
        // straight to stderr so the lines show without --nocapture
        let mut err = std::io::stderr().lock();
        writeln!(err, "{}", r.line()).unwrap();
        for f in &r.failures {
            writeln!(err, "    {f}").unwrap();
        }
        let ok = if id == 2 { (r.pass || r.documented) && r.elapsed_ms <= r.budget_ms } else { r.pass };
        if !ok {
            unexpected.push(id);
        }
    }
    assert!(unexpected.is_empty(), "criteria failing outside documented classes: {unexpected:?}");
}
