// Generated by gen_oracles.py. Do not edit by hand.

pub const STUDENT_T_SF: &[(f64, f64, f64)] = &[
    (-3.0, 0.5, 0.8163459220070283),
    (-0.7, 0.5, 0.6572996687396168),
    (0.0, 0.5, 0.5),
    (0.4, 0.5, 0.399556243019837),
    (1.0, 0.5, 0.3011216108413221),
    (2.236, 0.5, 0.21139883603134035),
    (4.5, 0.5, 0.1506265812777687),
    (12.0, 0.5, 0.09253026053460106),
    (-3.0, 1.0, 0.8975836176504333),
    (-0.7, 1.0, 0.6944001122142148),
    (0.0, 1.0, 0.5),
    (0.4, 1.0, 0.3788810584091566),
    (1.0, 1.0, 0.25),
    (2.236, 1.0, 0.1338638428103488),
    (4.5, 1.0, 0.06960448727306395),
    (12.0, 1.0, 0.026464676059589874),
    (-3.0, 2.0, 0.9522670168666454),
    (-0.7, 2.0, 0.7218034876835673),
    (0.0, 2.0, 0.5),
    (0.4, 2.0, 0.36391723651204566),
    (1.0, 2.0, 0.2113248654051871),
    (2.236, 2.0, 0.07742654319528161),
    (4.5, 2.0, 0.02300095399713801),
    (12.0, 2.0, 0.00343646683857923),
    (-3.0, 3.0, 0.9711655571887814),
    (-0.7, 3.0, 0.7328365008476182),
    (0.0, 3.0, 0.5),
    (0.4, 3.0, 0.35796757698718507),
    (1.0, 3.0, 0.19550110947788532),
    (2.236, 3.0, 0.05568709104930095),
    (4.5, 3.0, 0.010245206172226705),
    (12.0, 3.0, 0.0006225079003946683),
    (-3.0, 5.0, 0.9849503760512687),
    (-0.7, 5.0, 0.7424255258425918),
    (0.0, 5.0, 0.5),
    (0.4, 5.0, 0.35283655741655723),
    (1.0, 5.0, 0.1816087338245613),
    (2.236, 5.0, 0.037796634947109484),
    (4.5, 5.0, 0.003199768173162147),
    (12.0, 5.0, 3.544746258580761e-05),
    (-3.0, 8.0, 0.9914641593831087),
    (-0.7, 8.0, 0.7481144739907276),
    (0.0, 8.0, 0.5),
    (0.4, 8.0, 0.3498122523802104),
    (1.0, 8.0, 0.17329675354366714),
    (2.236, 8.0, 0.027886221924713104),
    (4.5, 8.0, 0.0010010461377592992),
    (12.0, 8.0, 1.0719333738443856e-06),
    (-3.0, 10.0, 0.9933281724887152),
    (-0.7, 10.0, 0.7500562149135578),
    (0.0, 10.0, 0.5),
    (0.4, 10.0, 0.34878370482956145),
    (1.0, 10.0, 0.17044656615102993),
    (2.236, 10.0, 0.02466894200636502),
    (4.5, 10.0, 0.0005715525434020326),
    (12.0, 10.0, 1.4607044123849935e-07),
    (-3.0, 17.5, 0.9960681029531175),
    (-0.7, 17.5, 0.7534356029958312),
    (0.0, 17.5, 0.5),
    (0.4, 17.5, 0.346998416634573),
    (1.0, 17.5, 0.16546902167579605),
    (2.236, 17.5, 0.019320470882192263),
    (4.5, 17.5, 0.00014769624214741305),
    (12.0, 17.5, 3.5522087754676954e-10),
    (-3.0, 30.0, 0.9973050179671741),
    (-0.7, 30.0, 0.7553397782501642),
    (0.0, 30.0, 0.5),
    (0.4, 30.0, 0.345995258257096),
    (1.0, 30.0, 0.16265430771301495),
    (2.236, 30.0, 0.016470619063466092),
    (4.5, 30.0, 4.7596796960562346e-05),
    (12.0, 30.0, 2.790092707599628e-13),
    (-3.0, 100.0, 0.9982960423283352),
    (-0.7, 100.0, 0.7572236967728133),
    (0.0, 100.0, 0.5),
    (0.4, 100.0, 0.3450048372039453),
    (1.0, 100.0, 0.1598620778920617),
    (2.236, 100.0, 0.013787102631792584),
    (4.5, 100.0, 9.192305773807764e-06),
    (12.0, 100.0, 2.197543857802189e-21),
    (-3.0, 1000.0, 0.9986166454778809),
    (-0.7, 1000.0, 0.7579549430036988),
    (0.0, 1000.0, 0.5),
    (0.4, 1000.0, 0.34462097163302907),
    (1.0, 1000.0, 0.15877620904233616),
    (2.236, 1000.0, 0.01278586155747206),
    (4.5, 1000.0, 3.796535513249122e-06),
    (12.0, 1000.0, 2.1620286933872636e-31),
];

pub const F_DIST_SF: &[(f64, f64, f64, f64)] = &[
    (0.0, 1.0, 1.0, 1.0),
    (0.05, 1.0, 1.0, 0.859951303906898),
    (0.5, 1.0, 1.0, 0.6081734479693928),
    (1.0, 1.0, 1.0, 0.5),
    (2.0, 1.0, 1.0, 0.3918265520306073),
    (4.0, 1.0, 1.0, 0.2951672353008665),
    (16.0, 1.0, 1.0, 0.15595826075473865),
    (60.0, 1.0, 1.0, 0.08173517562105032),
    (0.0, 1.0, 4.0, 1.0),
    (0.05, 1.0, 4.0, 0.8340192043895748),
    (0.5, 1.0, 4.0, 0.5185185185185185),
    (1.0, 1.0, 4.0, 0.37390096630005887),
    (2.0, 1.0, 4.0, 0.23019964108049898),
    (4.0, 1.0, 4.0, 0.11611652351681559),
    (16.0, 1.0, 4.0, 0.016130089900092532),
    (60.0, 1.0, 4.0, 0.0014964810559003343),
    (0.0, 2.0, 7.0, 1.0),
    (0.05, 2.0, 7.0, 0.951566007629483),
    (0.5, 2.0, 7.0, 0.6266545330387997),
    (1.0, 2.0, 7.0, 0.4149486509808663),
    (2.0, 2.0, 7.0, 0.205574263019978),
    (4.0, 2.0, 7.0, 0.06942625407850157),
    (16.0, 2.0, 7.0, 0.002449723201567448),
    (60.0, 2.0, 7.0, 3.9312450568184656e-05),
    (0.0, 3.0, 30.0, 1.0),
    (0.05, 3.0, 30.0, 0.9849263153922541),
    (0.5, 3.0, 30.0, 0.6851195412952079),
    (1.0, 3.0, 30.0, 0.4063572668729487),
    (2.0, 3.0, 30.0, 0.13519999888940346),
    (4.0, 3.0, 30.0, 0.016515374662309314),
    (16.0, 3.0, 30.0, 2.13476821537936e-06),
    (60.0, 3.0, 30.0, 8.778572114203365e-13),
    (0.0, 5.0, 5.0, 1.0),
    (0.05, 5.0, 5.0, 0.9974477392801275),
    (0.5, 5.0, 5.0, 0.7674886808696214),
    (1.0, 5.0, 5.0, 0.5),
    (2.0, 5.0, 5.0, 0.23251131913037862),
    (4.0, 5.0, 5.0, 0.0771886252422067),
    (16.0, 5.0, 5.0, 0.004275049704645037),
    (60.0, 5.0, 5.0, 0.00018365516273613014),
    (0.0, 1.0, 313.0, 1.0),
    (0.05, 1.0, 313.0, 0.823209145806025),
    (0.5, 1.0, 313.0, 0.48002622774071857),
    (1.0, 1.0, 313.0, 0.31808295947420395),
    (2.0, 1.0, 313.0, 0.15829312223435912),
    (4.0, 1.0, 313.0, 0.04636403319304341),
    (16.0, 1.0, 313.0, 7.91003786493368e-05),
    (60.0, 1.0, 313.0, 1.3302653934867366e-13),
    (0.0, 10.0, 2.5, 1.0),
    (0.05, 10.0, 2.5, 0.9997894662646594),
    (0.5, 10.0, 2.5, 0.8179519760375602),
    (1.0, 10.0, 2.5, 0.5808678289025202),
    (2.0, 10.0, 2.5, 0.3401682198746172),
    (4.0, 10.0, 2.5, 0.17272529207488194),
    (16.0, 10.0, 2.5, 0.03559568675736541),
    (60.0, 10.0, 2.5, 0.0070937488758363604),
    (0.0, 0.5, 12.0, 1.0),
    (0.05, 0.5, 12.0, 0.6378363500149712),
    (0.5, 0.5, 12.0, 0.3704340095316572),
    (1.0, 0.5, 12.0, 0.2690112005326306),
    (2.0, 0.5, 12.0, 0.1682010008048075),
    (4.0, 0.5, 12.0, 0.0829092936025035),
    (16.0, 0.5, 12.0, 0.005755983139608772),
    (60.0, 0.5, 12.0, 4.7622669078788154e-05),
];

pub const WELCH: &[(&[f64], &[f64], f64, f64, f64)] = &[
    (&[0.0, 1.0, 2.0, 3.0, 4.0], &[2.0, 3.0, 4.0, 5.0, 6.0], -2.0, 8.0, 0.08051623795726257),
    (&[0.61, 0.72, 0.69, 0.66, 0.71, 0.68], &[0.64, 0.65, 0.61, 0.7], 1.1445800379536455, 6.871719069302971, 0.29067994587619933),
    (&[1.0, 1.5, 1.2, 3.9, 2.2, 2.8, 0.4], &[10.0, 11.5, 9.0], -9.709139139212748, 3.668277221900608, 0.0009537474022280954),
];

pub const POOLED: (&[f64], &[f64], f64, f64, f64) = (&[0.61, 0.72, 0.69, 0.66, 0.71, 0.68], &[0.64, 0.65, 0.61, 0.7], 1.129418526010868, 8.0, 0.2914463585841637);

pub const ANOVA_BALANCED_VALUES: &[f64] = &[1.0, 2.0, 1.0, 2.0, 3.0, 4.0, 3.0, 4.0];
pub const ANOVA_BALANCED_A: &[&str] = &["a1", "a1", "a1", "a1", "a2", "a2", "a2", "a2"];
pub const ANOVA_BALANCED_B: &[&str] = &["b1", "b1", "b2", "b2", "b1", "b1", "b2", "b2"];
/// (sum_sq, dof, F, p) for A, B, AxB, residual; NaN where undefined.
pub const ANOVA_BALANCED_TABLE: [(f64, f64, f64, f64); 4] = [
    (8.000000000000002, 1.0, 16.000000000000004, 0.016130089900092525),
    (6.1629758220391565e-31, 1.0, 1.2325951644078313e-30, 1.0),
    (3.9443045261050573e-31, 1.0, 7.8886090522101146e-31, 1.0),
    (2.0, 4.0, f64::NAN, f64::NAN),
];

pub const ANOVA_UNBALANCED_VALUES: &[f64] = &[0.69, 0.71, 0.66, 0.7, 0.68, 0.64, 0.66, 0.62, 0.65, 0.67, 0.63, 0.66, 0.61, 0.64, 0.6, 0.66, 0.63];
pub const ANOVA_UNBALANCED_A: &[&str] = &["F", "F", "F", "F", "F", "F", "F", "F", "F", "M", "M", "M", "M", "M", "M", "M", "M"];
pub const ANOVA_UNBALANCED_B: &[&str] = &["F", "F", "F", "F", "M", "M", "M", "M", "M", "F", "F", "F", "M", "M", "M", "M", "M"];
/// (sum_sq, dof, F, p) for A, B, AxB, residual; NaN where undefined.
pub const ANOVA_UNBALANCED_TABLE: [(f64, f64, f64, f64); 4] = [
    (0.0032960048426150085, 1.0, 6.545019799490084, 0.023814531390937567),
    (0.004540131826741851, 1.0, 9.015536723163548, 0.010188059606737784),
    (0.0002187570621469033, 1.0, 0.43439538817358564, 0.5213441352891381),
    (0.006546666666666671, 13.0, f64::NAN, f64::NAN),
];

pub const ANOVA_THREE_LEVEL_VALUES: &[f64] = &[3.1, 2.9, 3.4, 4.0, 4.4, 5.1, 5.3, 2.2, 2.8, 2.5, 3.9, 4.1, 3.6, 6.0, 5.5];
pub const ANOVA_THREE_LEVEL_A: &[&str] = &["x", "x", "x", "x", "x", "y", "y", "y", "y", "y", "z", "z", "z", "z", "z"];
pub const ANOVA_THREE_LEVEL_B: &[&str] = &["p", "p", "q", "q", "q", "p", "p", "p", "q", "q", "p", "q", "q", "p", "q"];
/// (sum_sq, dof, F, p) for A, B, AxB, residual; NaN where undefined.
pub const ANOVA_THREE_LEVEL_TABLE: [(f64, f64, f64, f64); 4] = [
    (3.9194801587301566, 2.0, 1.6427501441433443, 0.2465037233075521),
    (0.5444444444444456, 1.0, 0.4563800062092528, 0.5163008680240538),
    (3.746888888888881, 2.0, 1.5704129152437103, 0.26000054755012497),
    (10.736666666666665, 9.0, f64::NAN, f64::NAN),
];

pub const BH: &[(&[f64], &[f64])] = &[
    (&[0.01, 0.02, 0.03, 0.04], &[0.04, 0.04, 0.04, 0.04]),
    (&[0.9, 0.95], &[0.95, 0.95]),
    (&[0.001, 0.008, 0.039, 0.041, 0.042, 0.06, 0.074, 0.205, 0.212, 0.216], &[0.01, 0.04, 0.084, 0.084, 0.084, 0.1, 0.10571428571428572, 0.216, 0.216, 0.216]),
    (&[0.04, 0.01, 0.5, 0.03, 0.2], &[0.06666666666666667, 0.049999999999999996, 0.5, 0.06666666666666667, 0.25]),
];

pub const SPEARMAN: &[(&[f64], &[f64], f64)] = &[
    (&[1.0, 2.0, 3.0, 4.0], &[2.0, 1.0, 4.0, 3.0], 0.6000000000000001),
    (&[1.0, 2.0, 2.0, 3.0, 5.0, 5.0, 5.0], &[7.0, 3.0, 3.0, 1.0, 0.0, 2.0, 2.0], -0.8193821290142088),
    (&[0.3, 0.1, 0.4, 0.1, 0.5, 0.9, 0.2], &[0.2, 0.7, 0.1, 0.8, 0.2, 0.8, 0.4], -0.2660662432388705),
];

pub const QUARTILES: &[(&[f64], f64, f64)] = &[
    (&[1.0, 2.0, 3.0, 4.0, 100.0], 2.0, 4.0),
    (&[0.4, 0.41, 0.5, 0.52, 0.55, 0.58, 0.61, 0.9], 0.4775, 0.5874999999999999),
    (&[5.0, 1.0, 4.0, 2.0], 1.75, 4.25),
];
