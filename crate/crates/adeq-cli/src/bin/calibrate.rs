//! Development tool: fits basic-polyhedron slot numberings and sign
//! conventions against the tabulated classification anchors.

use adeq_core::conway::parse_conway;
use adeq_core::invariants::adequacy_number;
use adeq_core::polyhedra::{Registry, Seed, Template};
use adeq_core::state::{classify_diagram, count_adequate_states};
use adeq_core::tangle::{build_diagram, build_diagram_with};

const RATIONAL_ANCHORS: &[(&str, usize)] = &[
    ("2", 2),
    ("2 2", 3),
    ("3", 2),
    ("2 1 2", 4),
    ("4", 2),
    ("2 2 2", 5),
    ("2 1 1 2", 5),
    ("2,2,2", 5),
    ("2 1 2 2", 6),
    ("2 1 1 1 2", 7),
    ("2,2,2+", 8),
    ("2 1,2,2", 6),
    ("2 2 2 2", 8),
    ("2 1 2 1 2", 8),
    ("2 2 1 1 2", 8),
    ("2 1 1 1 1 2", 9),
    ("2,2,2,2", 12),
    ("2 2,2,2", 7),
    ("2 1 1,2,2", 9),
    ("2 1,2 1,2", 8),
    ("2,2,2++", 9),
    ("2 1,2,2+", 9),
    ("(2,2) (2,2)", 8),
    ("2 2 1 2 2", 9),
    ("2 2 2 1 2", 10),
    ("2 1 2 1 1 2", 10),
    ("2 2 1 1 1 2", 11),
    ("2 1 1 1 1 1 2", 12),
    ("2 1,2 1,2 1", 12),
    ("2 1 2,2,2", 10),
    ("2 2 1,2,2", 11),
    ("2 1 1 1,2,2", 13),
    ("2 1,2,2,2", 9),
    ("2 2,2 1,2", 11),
    ("2 1 1,2 1,2", 10),
    ("2 1,2,2++", 10),
    ("2,2,2,2+", 16),
    ("2 2,2,2+1", 12),
    ("2 1 1,2,2+", 13),
    ("2 1,2 1,2+", 11),
    ("(2 1,2) (2,2)", 11),
    ("(2,2) 1 (2,2)", 12),
];

const SIX_STAR_ANCHORS: &[(&str, usize)] = &[
    (".2", 7),
    (".2 1", 10),
    (".2:2", 9),
    (".2.2", 8),
    (".2:2 0", 8),
    (".2.2 0", 8),
    (".2 2", 11),
    (".2 1 1", 13),
    (".2 1:2", 12),
    (".2 1:2 0", 12),
    (".2 1.2 0", 11),
    (".2.2 0.2", 10),
    ("2:2 0:2 0", 10),
    ("2 0:2 0:2 0", 9),
    (".2.2.2", 10),
    ("2:2:2", 9),
    (".2.2.2 0", 9),
    ("2:2:2 0", 9),
    (".(2,2)", 14),
];

const EIGHT_STAR_ANCHORS: &[(&str, usize)] = &[("8*2", 12), ("8*2 0", 13)];

fn permutations(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut items: Vec<u32> = (0..n as u32).collect();
    fn heap(k: usize, items: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut out);
    out
}

fn check_anchors(registry: &Registry, anchors: &[(&str, usize)], verbose: bool) -> usize {
    let mut bad = 0;
    for &(sym, want) in anchors {
        let e = match parse_conway(sym) {
            Ok(e) => e,
            Err(err) => {
                println!("  {sym}: PARSE ERROR {err}");
                bad += 1;
                continue;
            }
        };
        let d = match build_diagram_with(&e, registry) {
            Ok(d) => d,
            Err(err) => {
                println!("  {sym}: BUILD ERROR {err}");
                bad += 1;
                continue;
            }
        };
        match count_adequate_states(&d, 24) {
            Ok((got, _)) => {
                if got != want {
                    bad += 1;
                    if verbose {
                        println!("  {sym}: got {got}, want {want}");
                    }
                } else if verbose {
                    println!("  {sym}: {got} ok");
                }
            }
            Err(err) => {
                println!("  {sym}: {err}");
                bad += 1;
            }
        }
    }
    bad
}

fn cmd_signs() {
    for (sym, want) in [
        ("2,2,-2", "-adequate"),
        ("-2,-2,2", "+adequate"),
        ("2,-2", "inadequate"),
        ("2,2,-2,-2", "adequate"),
        ("3 2 4 -2 2", "semi"),
        ("3 3 4 -1 2", "inadequate"),
    ] {
        let d = build_diagram(&parse_conway(sym).unwrap()).unwrap();
        let c = classify_diagram(&d);
        println!("{sym}: {c} (want {want})");
    }
}

fn cmd_rational() {
    let registry = Registry::builtin();
    let bad = check_anchors(&registry, RATIONAL_ANCHORS, true);
    println!("rational/pretzel anchors: {bad} mismatches of {}", RATIONAL_ANCHORS.len());
}

fn cmd_fit6() {
    let rot = Seed::wheel(3).medial();
    let perms = permutations(6);
    let mut hits = Vec::new();
    let mut registry = Registry::builtin();
    for perm in &perms {
        for mask in 0u32..64 {
            let turns: Vec<bool> = (0..6).map(|i| mask >> i & 1 == 1).collect();
            let t = Template::new("6*", rot.clone(), perm.clone(), 0).with_frame_turns(&turns);
            registry.insert(t);
            if check_anchors(&registry, SIX_STAR_ANCHORS, false) == 0 {
                hits.push((perm.clone(), mask));
            }
        }
    }
    println!("6* fits: {} of {}", hits.len(), perms.len() * 64);
    for (h, mask) in &hits {
        println!("  order {h:?} turns {mask:06b}");
    }
}

fn cmd_check6() {
    let registry = Registry::builtin();
    let bad = check_anchors(&registry, SIX_STAR_ANCHORS, true);
    println!("6* anchors: {bad} mismatches of {}", SIX_STAR_ANCHORS.len());
    let bad8 = check_anchors(&registry, EIGHT_STAR_ANCHORS, true);
    println!("8* anchors: {bad8} mismatches of {}", EIGHT_STAR_ANCHORS.len());
}

fn cmd_perko() {
    let registry = Registry::builtin();
    for sym in [
        "6*3:-2 0:-2 0",
        "6*-2 -1.-1.2 0.-1.2 0.-1",
        "9*.-2:.-2",
        "6*-2.2.-2.2.2 0.-2 0",
    ] {
        match parse_conway(sym) {
            Ok(e) => match build_diagram_with(&e, &registry) {
                Ok(d) => {
                    let c = classify_diagram(&d);
                    let w = d.writhe(&d.default_orientation());
                    println!(
                        "{sym}: {c}, writhe {w}, components {}, alternating {}",
                        d.component_count(),
                        d.is_alternating()
                    );
                }
                Err(err) => println!("{sym}: BUILD ERROR {err}"),
            },
            Err(err) => println!("{sym}: PARSE ERROR {err}"),
        }
    }
}

fn cmd_anchor3154() {
    use adeq_core::invariants::adequacy_polynomial;
    let d = build_diagram(&parse_conway("3 1 5 4").unwrap()).unwrap();
    println!("components: {}", d.component_count());
    println!(
        "adequacy number: {}",
        adequacy_number(&[d.clone()], 24).unwrap()
    );
    match adequacy_polynomial(&d, 3, 24) {
        Ok(rep) => {
            println!("torsion sequence: {:?}", rep.torsion_sequence());
            for s in &rep.states {
                println!(
                    "  state {}: circles {}, reduced v {}, t {}, P {}",
                    s.state, s.circle_count, s.reduced_vertices, s.torsion, s.chromatic
                );
            }
            println!("A(x,y) = {}", rep.poly);
        }
        Err(err) => println!("adequacy polynomial error: {err}"),
    }
}

fn cmd_probe(args: &[String]) {
    for sym in args {
        let e = match parse_conway(sym) {
            Ok(e) => e,
            Err(err) => {
                println!("{sym}: PARSE ERROR {err}");
                continue;
            }
        };
        let d = match build_diagram(&e) {
            Ok(d) => d,
            Err(err) => {
                println!("{sym}: BUILD ERROR {err}");
                continue;
            }
        };
        let c = classify_diagram(&d);
        let a = count_adequate_states(&d, 24)
            .map(|(n, _)| n.to_string())
            .unwrap_or_else(|e| e.to_string());
        println!(
            "{sym}: n={} comps={} alt={} nugatory={:?} class={} a={}",
            d.crossing_count(),
            d.component_count(),
            d.is_alternating(),
            d.nugatory_crossings(),
            c,
            a
        );
    }
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match args.first().map(|s| s.as_str()) {
        Some("signs") => cmd_signs(),
        Some("rational") => cmd_rational(),
        Some("fit6") => cmd_fit6(),
        Some("check6") => cmd_check6(),
        Some("perko") => cmd_perko(),
        Some("3154") => cmd_anchor3154(),
        Some("probe") => cmd_probe(&args[1..]),
        _ => {
            eprintln!("usage: adeq-calibrate <signs|rational|fit6|check6|perko|3154|probe SYM..>");
            std::process::exit(2);
        }
    }
}
