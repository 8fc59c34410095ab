use realspace::realization::*;
use num_rational::BigRational;
fn main() {
    let ex = realspace::catalog::ordered_examples().into_iter().find(|e| e.name == "rank6-twelve").unwrap();
    let w = ex.ordering.as_ref().unwrap();
    let pm = build_realization(&ex.matroid, w).unwrap();
    let point: Vec<BigRational> = (0..pm.params.len()).map(|i| BigRational::new((37 * i as i64 + 5).into(), (i as i64 % 7 + 911).into())).collect();
    let t = std::time::Instant::now();
    let nz = pm.nonvanishing.iter().all(|f| !num_traits::Zero::is_zero(&f.eval(&point)));
    println!("eval nv {:?} {}", t.elapsed(), nz);
    let t = std::time::Instant::now();
    let cols = pm.evaluate(&point);
    println!("eval cols {:?}", t.elapsed());
    let t = std::time::Instant::now();
    let r = compare_ranks(&ex.matroid, &cols);
    println!("ranks {:?} {:?}", t.elapsed(), r);
}
