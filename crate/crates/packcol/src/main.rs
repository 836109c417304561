use packcol::config::{builtin, verify_with, MarkerRule, Normalization};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let name = args.get(1).map(String::as_str).unwrap_or("lemma-3.8");
    let mode = match args.get(2).map(String::as_str) {
        Some("off") => Normalization::Off,
        Some("one") => Normalization::OneColor,
        _ => Normalization::BothColors,
    };
    let rule = match args.get(3).map(String::as_str) {
        Some("every") => MarkerRule::EveryChoice,
        Some("strict") => MarkerRule::SomeChoiceStrict,
        _ => MarkerRule::SomeChoice,
    };
    let cfg = builtin(name).expect("builtin name");
    let t = std::time::Instant::now();
    let report = verify_with(&cfg, mode, rule);
    println!(
        "{} mode={:?} rule={:?}: consistent={} (plain {}) shadows={} bad={} (plain {}) in {:.1?}",
        cfg.name(),
        mode,
        rule,
        report.stats.classes_swapped,
        report.stats.classes_plain,
        report.stats.distinct_shadows,
        report.bad_count(),
        report.bad_count_plain,
        t.elapsed()
    );
    for bc in report.bad_cases.iter().take(40) {
        let codes: Vec<String> = bc.codes.iter().map(i8::to_string).collect();
        println!("  bad orbit={} {}", bc.orbit, codes.join(" "));
    }
}
