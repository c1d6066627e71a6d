use gcb_core::corpus;
use gcb_core::report::ReportOptions;

fn main() {
    // smallest failing instance: B(Z3,Z3,t1)/Z2/mu1/omega0
    for inst in corpus::zestable_corpus() {
        if inst.name != "B(Z3,Z3,t1)/Z2/mu1/omega0" { continue; }
        println!("mu values: {:?}", inst.mu.values());
        println!("omega values: {:?}", inst.omega.values());
        let c = inst.build();
        let k = &c.k;
        // Solve (beta3) for muact: for each (g,h,z) use x=(g,0-local...)
        // muact(g,h,z) = -a(x,y,z) + c(x.y, z) - a(FFz,x,y) - c(y,z) + a(x,Fhz,y) - c(x,Fhz)
        let ng = c.grp.order();
        let mut mismatches = 0;
        for g in 0..ng {
            for h in 0..ng {
                for z in c.objects() {
                    // required value from (beta3), using the first object of
                    // grades g and h
                    let x = c.objects_of_grade(g).next().unwrap();
                    let y = c.objects_of_grade(h).next().unwrap();
                    let fhz = c.f(h, z);
                    let ffz = c.f(g, fhz);
                    let lhs_rest = {
                        let mut v = k.sub(c.c(c.ten(x, y), z), c.a(x, y, z));
                        v = k.sub(v, c.a(ffz, x, y));
                        v
                    };
                    let rhs = {
                        let mut v = k.sub(c.c(y, z), c.a(x, fhz, y));
                        v = k.add(v, c.c(x, fhz));
                        v
                    };
                    // lhs_rest - muact = rhs  =>  muact_required = lhs_rest - rhs
                    let required = k.sub(lhs_rest, rhs);
                    let got = c.muact(g, h, z);
                    if required != got {
                        mismatches += 1;
                        if mismatches < 18 {
                            println!("muact({g},{h},{z}[grade {}]): got {got}, beta3 wants {required}, diff {}",
                                c.grade_of(z), k.sub(got, required));
                        }
                    }
                }
            }
        }
        println!("mismatches: {mismatches}");
        // also print psi and muact tables compactly for grades
        let report = c.verify_action(ReportOptions::All);
        println!("action axioms: {:?}", report.axioms_hit().iter().map(|a| a.to_string()).collect::<Vec<_>>());
    }
}
