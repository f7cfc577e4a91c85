use delpezzo::family;
use delpezzo::poly::rat;
use std::time::Instant;

fn main() {
    let t0 = Instant::now();
    let ideal = family::family_ideal().unwrap();
    println!("family_ideal: {} gens in {:?}", ideal.generators().len(), t0.elapsed());
    let t = Instant::now();
    println!("double_inclusion: {} in {:?}", family::double_inclusion(&ideal).unwrap(), t.elapsed());
    for v in [1i64, 2, -1, 0, -4] {
        let t = Instant::now();
        match family::fiber_analysis(&rat(v)) {
            Ok(rep) => println!(
                "fiber t={v}: dim={} deg={} quad={} smooth={} status={:?} in {:?}",
                rep.dim, rep.degree, rep.quadric_generated, rep.is_smooth(),
                match &rep.status { family::FiberStatus::Smooth => "smooth".to_string(), family::FiberStatus::Singular(s) => format!("{:?}", s.iter().map(|(p, a, t)| (p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(":"), format!("{a:?}"), *t)).collect::<Vec<_>>()) },
                t.elapsed()
            ),
            Err(e) => println!("fiber t={v}: ERROR {e} in {:?}", t.elapsed()),
        }
    }
    let t = Instant::now();
    // Specialization commutes with elimination at t in {0, 1, -4}.
    for v in [0i64, 1, -4] {
        let spec_ideal = family::specialize_ideal(&ideal, &rat(v)).unwrap();
        let direct = delpezzo::embed::implicitize(&family::specialize_map(&rat(v))).unwrap();
        println!("specialize t={v}: equal={}", spec_ideal.equals(&direct).unwrap());
    }
    println!("specialization checks in {:?}", t.elapsed());
    let t = Instant::now();
    match family::singular_fiber_locus() {
        Ok(locus) => println!(
            "locus: {:?} unresolved={:?} in {:?}",
            locus.roots.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            locus.unresolved,
            t.elapsed()
        ),
        Err(e) => println!("locus ERROR {e} in {:?}", t.elapsed()),
    }
    println!("total {:?}", t0.elapsed());
}
