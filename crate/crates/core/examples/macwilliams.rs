//! MacWilliams transform of a random code against its directly computed
//! dual.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};

use lcodes::enumerators::{cwe, macwilliams_cwe, macwilliams_swe, swe};
use lcodes::{Flavor, LinearCode, Word};

fn main() -> lcodes::Result<()> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for _ in 0..5 {
        let n = rng.gen_range(1..=5);
        let gens: Vec<Word> = (0..rng.gen_range(0..=n))
            .map(|_| Word::from_bits(n, rng.gen_range(0..1u64 << (2 * n))))
            .collect::<lcodes::Result<_>>()?;
        let code = LinearCode::span(Flavor::L, n, &gens)?;
        let size = BigInt::from(code.size());
        let dual = code.dual();
        let by_transform = macwilliams_swe(&swe(&code)?, &size)?;
        assert_eq!(by_transform, swe(&dual)?);
        assert_eq!(macwilliams_cwe(&cwe(&code)?, &size)?, cwe(&dual)?);
        println!("n={n} |C|={size:<3} swe(C^perp) = {by_transform}");
    }
    Ok(())
}
