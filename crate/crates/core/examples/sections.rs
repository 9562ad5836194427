//! m-sections of a sequence and interlacing them back.
use defsum::oracle::{interlace, msection};
use defsum::Sequence;

fn main() {
    let c = Sequence::from_ints(&[1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89]);
    let parts: Vec<Sequence> = (0..3).map(|j| msection(&c, 3, j).unwrap()).collect();
    for (j, p) in parts.iter().enumerate() {
        let v: Vec<String> = p.values().iter().map(ToString::to_string).collect();
        println!("section {j}: {}", v.join(", "));
    }
    println!("interlaced back: {}", interlace(&parts) == c);
}
