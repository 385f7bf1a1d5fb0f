//! Elements of J with prescribed numbers of positive and negative terms.

use sharpmap::gaps::{find_signature_witness, signature_witness, SignatureRecipe, RECIPE_TAGS};
use sharpmap::Signature;

fn main() {
    for tag in RECIPE_TAGS {
        let recipe = SignatureRecipe::from_tag(tag, 2, 2, None).unwrap();
        let w = signature_witness(&recipe).unwrap();
        println!("{tag:18} {}  {}", w.requested, w.poly);
    }

    for sig in [Signature::new(1, 1), Signature::new(0, 3), Signature::new(2, 1)] {
        match find_signature_witness(sig, 3) {
            Some(p) => println!("{sig}: {p}"),
            None => println!("{sig}: none up to degree 3"),
        }
    }
}
