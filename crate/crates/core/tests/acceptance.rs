use seidel_core::repro::{Repro, ReproOptions};

fn main() {
    let mut repro = Repro::new(ReproOptions::default());
    let mut failed = 0;
    for o in repro.run_all() {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {tag} {} ({:.1}s): {}", o.id, o.name, o.seconds, o.detail);
        failed += usize::from(!o.pass);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
