//! The twisted denominator relation for the identity class, from bundled
//! data or a Thompson data file given as the first argument.
//!
//! `cargo run --example twisted_moonshine -- emit` prints identity-class
//! data in the file format instead.

use gkmcheck::moonshine::{identity_data_for, twisted_requirements, verify_twisted, ThompsonData};

fn main() {
    let arg = std::env::args().nth(1);
    if arg.as_deref() == Some("emit") {
        let full = identity_data_for(6, 6);
        let need = twisted_requirements(6, 6);
        let series = need
            .iter()
            .map(|(&n, &hi)| (n, full.series(n).unwrap().truncate(hi)))
            .collect();
        let max_power = *need.keys().last().unwrap();
        print!(
            "{}",
            ThompsonData::new("1A", series, max_power)
                .unwrap()
                .to_text()
        );
        return;
    }
    let data = match arg {
        Some(path) => ThompsonData::parse(&std::fs::read_to_string(path).unwrap()).unwrap(),
        None => identity_data_for(5, 5),
    };
    let r = verify_twisted(&data, 5, 5).unwrap();
    println!(
        "class {}: equal={} integral={}",
        data.label,
        r.equal,
        r.get_param("integral").unwrap_or("?")
    );
    if let Some(d) = &r.first_discrepancy {
        println!("first difference at {}: {} vs {}", d.location, d.lhs, d.rhs);
    }
}
