use gcb_core::corpus;
use gcb_core::report::ReportOptions;

fn main() {
    let mut bad = 0;
    for inst in corpus::zestable_corpus() {
        let c = inst.build();
        if let Err(e) = c.validate_typing() {
            println!("{}: TYPING {e}", inst.name);
            bad += 1;
            continue;
        }
        let report = c.verify_all(ReportOptions::All);
        if !report.passed() {
            let axioms = report.axioms_hit();
            println!(
                "{}: {} failures, axioms {:?}",
                inst.name,
                report.total_failures(),
                axioms.iter().map(|a| a.to_string()).collect::<Vec<_>>()
            );
            bad += 1;
        }
    }
    println!("bad instances: {bad}");
}
