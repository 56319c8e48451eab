fn main() { println!("patic"); }
