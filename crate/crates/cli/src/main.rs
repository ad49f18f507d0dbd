fn main() { println!("latz"); }
