// The V(1)-homotopy tables of K(ku_p) and K(ko_p), weight pieces, the
// even-weight reassembly and the T(2)-local presentations.
//
// cargo run --example ktheory_tables

use std::error::Error;

use rootadj::document::render_table_text;
use rootadj::ktheory::{ko_check, ko_check_summary, t2_presentation, table_k_ko, table_k_ku, weight_piece, T2Table};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let ku = table_k_ku(5)?;
    print!("{}", ku.render_text());
    print!("{}", table_k_ko(5)?.render_text());
    print!("weight 0 of K(ku_5)\n{}", render_table_text(&weight_piece(&ku, 0, (0, 30))?));

    for p in [5, 7] {
        let r = ko_check(p, (-10, 200))?;
        println!("{}", ko_check_summary(p, &r));
    }
    for table in [T2Table::Ku, T2Table::Ko] {
        println!("{}", t2_presentation(7, table)?.presentation);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
