//! Atom lists for the 2×2 vertical bars embeddings, cells numbered 1..4 row-major.

// 46 atoms
pub const FREE_1: &str = "g1 g2 g3 g4 h1 h2 h3 h4 w1g1 w2g2 w3g3 w4g4 b1h1 b2h2 b3h3 b4h4 w1b1q1 w2b2q2 w3b3q3 \
    w4b4q4 b1q1g1 b2q2g2 b3q3g3 b4q4g4 w1q1h1 w2q2h2 w3q3h3 w4q4h4 w1w3n1g1g3 w2w4n2g2g4 \
    w1w3q1n1g3h1 w1w3b1q1n1g3 w1w3q3n1g1h3 w1w3b3q3n1g1 w2w4b2q2n2g4 w2w4b4q4n2g2 w2w4q2n2g4h2 \
    w2w4q4n2g2h4 w1w3b1q1q3n1h3 w1w3b1b3q1q3n1 w1w3q1q3n1h1h3 w1w3b3q1q3n1h1 w2w4b2b4q2q4n2 \
    w2w4b2q2q4n2h4 w2w4b4q2q4n2h2 w2w4q2q4n2h2h4";

// 28 atoms
pub const FS_1: &str = "g1 g2 g3 g4 h1 h2 h3 h4 w1g1 w3g3 b2h2 b4h4 w1b1q1 w2b2q2 w3b3q3 w2q2h2 w4b4q4 b1q1g1 \
    w4q4h4 b3q3g3 w1w3n1g1g3 w1w3b1q1n1g3 w1w3b3q3n1g1 w1w3b1b3q1q3n1 w2w4b2b4q2q4n2 \
    w2w4b2q2q4n2h4 w2w4b4q2q4n2h2 w2w4q2q4n2h2h4";

// 68 atoms
pub const FREE_2: &str = "g1 g2 g3 g4 h1 h2 h3 h4 w1g1 w2g2 w3g3 w4g4 b1h1 b2h2 b3h3 b4h4 w1b1q1 w2b2q2 w3b3q3 \
    w4b4q4 b1q1g1 b2q2g2 b3q3g3 b4q4g4 w1q1h1 w2q2h2 w3q3h3 w4q4h4 vw1b1q1 vw2b2q2 vw3b3q3 \
    vw4b4q4 vb1b2q1g1h2 vb1b2q2g2h1 vb1b4q1g1h4 vb1b4q4g4h1 vb2b3q2g2h3 vb2b3q3g3h2 \
    vb3b4q3g3h4 vb3b4q4g4h3 vb1b2q1q2g1g2 vb1b4q1q4g1g4 vb2b3q2q3g2g3 vb3b4q3q4g3g4 \
    vw1w2b2q1g2h1h2 vw2w3b2q3g2h2h3 vw2b2b4q4g2g4h2 vw2w4b2q4g2h2h4 vw1w2b1q2g1h1h2 \
    vw2w3b3q2g3h2h3 vw2b1b4q2h1h2h4 vw2b3b4q2h2h3h4 vw2w4b4q2g4h2h4 vw1w3b1q3g1h1h3 \
    vw1b1b3q3g1g3h1 vw1w4b1q4g1h1h4 vw3b1b3q1g1g3h3 vw3b1b2q3h1h2h3 vw3b1b4q3h1h3h4 \
    vw4b1b2q4h1h2h4 vw1w3b3q1g3h1h3 vw3w4b3q4g3h3h4 vw1b3b4q1h1h3h4 vw1b2b3q1h1h2h3 \
    vw4b2b3q4h2h3h4 vw1w4b4q1g4h1h4 vw4b2b4q2g2g4h4 vw3w4b4q3g4h3h4";

// 28 atoms
pub const FS_2: &str = "g1 g2 g3 g4 h1 h2 h3 h4 w1g1 w3g3 b2h2 b4h4 w1b1q1 w2b2q2 w3b3q3 w2q2h2 w4b4q4 b1q1g1 \
    w4q4h4 b3q3g3 vw1b1q1 vw2b2q2 vw3b3q3 vw4b4q4 vb1b2q1g1h2 vb1b4q1g1h4 vb2b3q3g3h2 \
    vb3b4q3g3h4";

// 44 atoms
pub const UNION_2: &str = "g1 g2 g3 g4 h1 h2 h3 h4 w1g1 w2g2 w3g3 w4g4 b1h1 b2h2 b3h3 b4h4 w1b1q1 w2b2q2 w3b3q3 \
    w4b4q4 b1q1g1 b2q2g2 b3q3g3 b4q4g4 w1q1h1 w2q2h2 w3q3h3 w4q4h4 vw1b1q1 vw2b2q2 vw3b3q3 \
    vw4b4q4 vb1b2q1g1h2 vb1b2q2g2h1 vb1b4q1g1h4 vb1b4q4g4h1 vb2b3q3g3h2 vb2b3q2g2h3 \
    vb3b4q3g3h4 vb3b4q4g4h3 vb1b2q1q2g1g2 vb1b4q1q4g1g4 vb2b3q2q3g2g3 vb3b4q3q4g3g4";

// 8 atoms
pub const FS_Q: &str = "w1 w3 b2 b4 w2q2 b1q1 w4q4 b3q3";

// 38 atoms
pub const SET_A: &str = "w1 w2 w3 w4 b1 b2 b3 b4 w1q1 w1w3 w2w4 w2q2 w3q3 b1q1 w4q4 b2q2 b3q3 b4q4 w1b1q1 w1w3q1 \
    w1w3q3 w2w4q2 w2w4q4 w2b2q2 w3b3q3 w4b4q4 w1w3b1q1 w1w3q1q3 w1w3b3q3 w2w4b2q2 w2w4b4q4 \
    w2w4q2q4 w1w3b1q1q3 w1w3b3q1q3 w2w4b2q2q4 w2w4b4q2q4 w1w3b1b3q1q3 w2w4b2b4q2q4";

// 32 atoms
pub const SET_B: &str = "w1 w2 w3 w4 b1 b2 b3 b4 w1q1 w2q2 w3q3 b1q1 w4q4 b2q2 b3q3 b4q4 w1b1q1 w2b2q2 w3b3q3 \
    b1b2q1 b1b2q2 b1b4q1 w4b4q4 b2b3q2 b2b3q3 b1b4q4 b3b4q3 b3b4q4 b1b2q1q2 b1b4q1q4 b2b3q2q3 \
    b3b4q3q4";

// 18 atoms
pub const A_MINUS_B: &str = "w1w3 w2w4 w1w3q1 w1w3q3 w2w4q2 w2w4q4 w1w3b1q1 w1w3q1q3 w1w3b3q3 w2w4b2q2 w2w4b4q4 \
    w2w4q2q4 w1w3b1q1q3 w1w3b3q1q3 w2w4b2q2q4 w2w4b4q2q4 w1w3b1b3q1q3 w2w4b2b4q2q4";

// 12 atoms
pub const B_MINUS_A: &str = "b1b2q1 b1b2q2 b1b4q1 b2b3q2 b2b3q3 b1b4q4 b3b4q3 b3b4q4 b1b2q1q2 b1b4q1q4 b2b3q2q3 \
    b3b4q3q4";

// 20 atoms
pub const A_AND_B: &str = "w1 w2 w3 w4 b1 b2 b3 b4 w1q1 w2q2 w3q3 b1q1 w4q4 b2q2 b3q3 b4q4 w1b1q1 w2b2q2 w3b3q3 \
    w4b4q4";

// 24 atoms
pub const EXTRA_2: &str = "vw1w2b2q1g2h1h2 vw2w3b2q3g2h2h3 vw2b2b4q4g2g4h2 vw2w4b2q4g2h2h4 vw1w2b1q2g1h1h2 \
    vw2w3b3q2g3h2h3 vw2b1b4q2h1h2h4 vw2b3b4q2h2h3h4 vw2w4b4q2g4h2h4 vw1w3b1q3g1h1h3 \
    vw1b1b3q3g1g3h1 vw1w4b1q4g1h1h4 vw3b1b3q1g1g3h3 vw3b1b2q3h1h2h3 vw3b1b4q3h1h3h4 \
    vw4b1b2q4h1h2h4 vw1w3b3q1g3h1h3 vw3w4b3q4g3h3h4 vw1b3b4q1h1h3h4 vw1b2b3q1h1h2h3 \
    vw4b2b3q4h2h3h4 vw1w4b4q1g4h1h4 vw4b2b4q2g2g4h4 vw3w4b4q3g4h3h4";

