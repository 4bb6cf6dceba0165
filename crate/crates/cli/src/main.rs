fn main() {
    println!("halg");
}
