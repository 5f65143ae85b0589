//! Runs every acceptance criterion and prints one line per criterion.

use habiro_core::acceptance::run;
use habiro_core::acceptance::TITLES;

fn main() {
    let mut failed = Vec::new();
    for id in 1..=TITLES.len() {
        let o = run(id);
        println!("{}", o);
        if !o.passed {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!(
            "acceptance: {} of {} criteria passed",
            TITLES.len(),
            TITLES.len()
        );
    } else {
        println!("acceptance: failed criteria {:?}", failed);
        std::process::exit(1);
    }
}
