fn main() {
    // regime continuity at z = 2
    for z in [1.999999998, 2.0000000020_f64, 39.99999996, 40.00000004] {
        println!("z={z}: k0s={:.17e} k1s={:.17e}", ybem::bessel::k0_scaled(z), ybem::bessel::k1_scaled(z));
    }
    // reference: K0(2)e^2 = 0.11389387274953344*e^2
    println!("want k0s(2)  = {:.17e}", 0.11389387274953344_f64 * 2.0_f64.exp());
    println!("want k1s(2)  = {:.17e}", 0.13986588181652243_f64 * 2.0_f64.exp());
    let spec = ybem::geometry::CurveSpec::Circle { radius: 1.0, center: [0.0, 0.0] };
    let mesh = ybem::geometry::build_mesh(&spec, 128, &ybem::geometry::GradingPolicy::Uniform).unwrap();
    let total: f64 = mesh.weights.iter().sum();
    println!("circle arclen = {total} vs {}", std::f64::consts::TAU);
    println!("mesh.arc_len = {}", mesh.arc_len);
    println!("n nodes = {}", mesh.len());
    println!("first weights: {:?}", &mesh.weights[..4]);
}
