#pragma once

// Hand transcriptions of the quivers used across the test suites.

namespace fixtures {

// Lambda((3,2), ~~) with x11+ ~~ x11- and x13+ ~~ x12-
inline const char* kIntroExample1 = R"(quiver intro1
vertex S
vertex B
vertex C
vertex D
vertex E
vertex J1
vertex J2
arrow x1p : S -> B
arrow x2p : B -> C
arrow x3p : C -> D
arrow x1m : S -> E
arrow x2m : E -> D
arrow u1 : B -> J1
arrow v1 : E -> J1
arrow u2 : D -> J2
arrow v2 : D -> J2
rel u1*x1p = 0
rel v1*x1m = 0
rel u2*x3p = 0
rel v2*x2m = 0
)";

// Lambda(((1,1),(1,1)), (2), ~~) with x11+ ~~ w11, x11- ~~ x21+, w12 ~~ w12
inline const char* kIntroExample2 = R"(quiver intro2
vertex A1
vertex B1
vertex A2
vertex B2
vertex C
vertex Z
vertex T
vertex W
vertex D
vertex G1
vertex G2
vertex P1
vertex P2
arrow x11p : A1 -> B1
arrow x11m : A1 -> B1
arrow x21p : A2 -> B2
arrow x21m : A2 -> B2
arrow z11 : C -> Z
arrow z12 : Z -> D
arrow t11 : C -> T
arrow t12 : T -> D
arrow w11 : C -> W
arrow w12 : W -> D
arrow u2 : B1 -> G1
arrow v2 : W -> G1
arrow u1 : B1 -> G2
arrow v1 : B2 -> G2
arrow v3p : D -> P1
arrow v3m : D -> P2
rel z12*z11 + w12*w11 + t12*t11 = 0
rel v3p*w12 = 0
rel v3m*w12 = 0
rel u1*x11m = 0
rel v1*x21p = 0
rel u2*x11p = 0
rel v2*w11 = 0
)";

// Lambda((3,1), ~~) with x11+ ~~ x12+ and x13+ ~~ x11-
inline const char* kAgExample2 = R"(quiver ag2
vertex A
vertex B
vertex C
vertex D
vertex E
vertex F
arrow x1p : A -> B
arrow x2p : B -> C
arrow x3p : C -> D
arrow x1m : A -> D
arrow u : B -> F
arrow v : C -> F
arrow w : D -> E
arrow z : D -> E
rel u*x1p = 0
rel v*x2p = 0
rel z*x3p = 0
rel w*x1m = 0
)";

// reference example before the glue rewrites
inline const char* kModOneInput = R"(quiver modone_in
vertex s
vertex m1
vertex j1
vertex c
vertex dd
vertex h
vertex e
vertex f
arrow x1 : s -> m1
arrow u1 : m1 -> j1
arrow x2 : m1 -> c
arrow x3 : c -> dd
arrow y1 : s -> e
arrow y2 : e -> f
arrow v2 : f -> j1
arrow y3 : f -> dd
arrow u3 : dd -> h
arrow v3 : dd -> h
rel u1*x1 = 0
rel u3*x3 = 0
rel v2*y2 = 0
rel v3*y3 = 0
)";

// its displayed result after rewriting at both glue vertices
inline const char* kModOneOutput = R"(quiver modone_out
vertex s
vertex m1
vertex j1
vertex c
vertex dd
vertex h
vertex e
vertex f
arrow x1_1 : s -> j1
arrow x1_2 : j1 -> m1
arrow y2_1 : e -> j1
arrow y2_2 : j1 -> f
arrow x2 : m1 -> c
arrow x3_1 : c -> dd
arrow x3_2 : dd -> h
arrow y3_1 : f -> dd
arrow y3_2 : dd -> h
arrow y1 : s -> e
rel x1_2*y2_1 = 0
rel y2_2*x1_1 = 0
rel x3_2*y3_1 = 0
rel y3_2*x3_1 = 0
)";

// reference example before the blow-up + glue rewrites
inline const char* kModTwoInput = R"(quiver modtwo_in
vertex jj
vertex b2
vertex c2
vertex a3
vertex d3
vertex h3
vertex e4
vertex p5
vertex q5
arrow x1 : a3 -> b2
arrow x2 : b2 -> c2
arrow u1 : b2 -> jj
arrow x3 : c2 -> d3
arrow u2 : c2 -> jj
arrow y1 : a3 -> e4
arrow y2 : e4 -> d3
arrow u3 : d3 -> h3
arrow v2 : d3 -> h3
arrow v1p : e4 -> q5
arrow v1m : e4 -> p5
rel u1*x1 = 0
rel u2*x2 = 0
rel u3*x3 = 0
rel v2*y2 = 0
rel v1p*y1 = 0
rel v1m*y1 = 0
)";

// its displayed result after the blow-up and both glue rewrites
inline const char* kModTwoOutput = R"(quiver modtwo_out
vertex jj
vertex b2
vertex c2
vertex a3
vertex yb
vertex d3
vertex h3
vertex e4
vertex ya
arrow x1_1 : a3 -> jj
arrow x1_2 : jj -> b2
arrow x2_1 : b2 -> jj
arrow x2_2 : jj -> c2
arrow x3_1 : c2 -> d3
arrow x3_2 : d3 -> h3
arrow y11p : a3 -> ya
arrow y12p : ya -> e4
arrow y11m : a3 -> yb
arrow y12m : yb -> e4
arrow y2_1 : e4 -> d3
arrow y2_2 : d3 -> h3
rel x2_2*x1_1 = 0
rel x1_2*x2_1 = 0
rel x3_2*y2_1 = 0
rel y2_2*x3_1 = 0
rel y12p*y11p - y12m*y11m = 0
)";

inline const char* kKronecker = R"(quiver K
vertex 1
vertex 2
arrow a : 1 -> 2
arrow b : 1 -> 2
)";

}  // namespace fixtures
