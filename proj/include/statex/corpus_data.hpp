#ifndef STATEX_CORPUS_DATA_HPP
#define STATEX_CORPUS_DATA_HPP

// Generated by tests/data/make_corpus.py. Do not edit.
// id, input, lenient, kind, stat_comp, stat, df1, df2, d, beta, se, zest, r2, p_comp, p, recalc

#include <cstdint>
#include <string_view>

namespace statex::detail {

inline constexpr std::string_view kCorpusData = R"corpus(1	t(12)=2.3, p<.05		t	=	2.30	12.00							<	0.05	0.04
2	F(1,23)=4.5, p=.23		F	=	4.50	1.00	23.00						=	0.23	0.04
3	r(12)=.34, p=.56		r	=	0.34	12.00							=	0.56	0.23
4	Z=1.2, p<.34		Z	=	1.20								<	0.34	0.23
5	χ^2(12)=3.4, p<.05		Chi2	=	3.40	12.00							<	0.05	0.99
6	χ2(12)=3.4, p<.05		Chi2	=	3.40	12.00							<	0.05	0.99
7	Chi^2(12)=3.4, p<.05		Chi2	=	3.40	12.00							<	0.05	0.99
8	chi2(12)=3.4, p<.05		Chi2	=	3.40	12.00							<	0.05	0.99
9	Q(12)=3.4, p<.01		Q	=	3.40	12.00							<	0.01	0.99
10	t(12)=.34, n.s.		t	=	0.34	12.00							ns		0.74
11	A(12)=.3, p<.05		Unknown										<	0.05	
12	B(12)=.3, p<.05		Unknown										<	0.05	
13	C(12)=.3, p<.05		Unknown										<	0.05	
14	D(12)=.3, p<.05		Unknown										<	0.05	
15	E(12)=.3, p<.05		Unknown										<	0.05	
16	F(12)=.3, p<.05	L	Unknown										<	0.05	
17	G(12)=.3, p<.05		Unknown										<	0.05	
18	H(12)=.3, p<.05		H	=	0.30	12.00							<	0.05	1.00
19	I(12)=.3, p<.05		Unknown										<	0.05	
20	J(12)=.3, p<.05		Unknown										<	0.05	
21	K(12)=.3, p<.05		Unknown										<	0.05	
22	L(12)=.3, p<.05		Unknown										<	0.05	
23	M(12)=.3, p<.05		Unknown										<	0.05	
24	N(12)=.3, p<.05		Unknown										<	0.05	
25	O(12)=.3, p<.05		Unknown										<	0.05	
26	P(12)=.3, p<.05		Unknown										<	0.05	
27	Q(12)=.3, p<.05		Q	=	0.30	12.00							<	0.05	1.00
28	R(12)=.3, p<.05		Unknown										<	0.05	
29	S(12)=.3, p<.05		Unknown										<	0.05	
30	T(12)=.3, p<.05		Unknown										<	0.05	
31	U(12)=.3, p<.05	L	U	=	0.30								<	0.05	
32	V(12)=.3, p<.05		Unknown										<	0.05	
33	W(12)=.3, p<.05	L	Unknown										<	0.05	
34	X(12)=.3, p<.05		Chi2	=	0.30	12.00							<	0.05	1.00
35	Y(12)=.3, p<.05		Unknown										<	0.05	
36	Z(12)=.3, p<.05		Z	=	0.30								<	0.05	0.76
37	a(12)=.3, p<.05		Unknown										<	0.05	
38	b(12)=.3, p<.05		Unknown										<	0.05	
39	c(12)=.3, p<.05		Unknown										<	0.05	
40	d(12)=.3, p<.05		Unknown										<	0.05	
41	e(12)=.3, p<.05		Unknown										<	0.05	
42	f(12)=.3, p<.05		Unknown										<	0.05	
43	g(12)=.3, p<.05		Unknown										<	0.05	
44	h(12)=.3, p<.05		Unknown										<	0.05	
45	i(12)=.3, p<.05		Unknown										<	0.05	
46	j(12)=.3, p<.05		Unknown										<	0.05	
47	k(12)=.3, p<.05		Unknown										<	0.05	
48	l(12)=.3, p<.05		Unknown										<	0.05	
49	m(12)=.3, p<.05		Unknown										<	0.05	
50	n(12)=.3, p<.05		Unknown										<	0.05	
51	o(12)=.3, p<.05		Unknown										<	0.05	
52	p(12)=.3, p<.05		Unknown										<	0.05	
53	q(12)=.3, p<.05		Q	=	0.30	12.00							<	0.05	1.00
54	r(12)=.3, p<.05		r	=	0.30	12.00							<	0.05	0.30
55	s(12)=.3, p<.05		Unknown										<	0.05	
56	t(12)=.3, p<.05		t	=	0.30	12.00							<	0.05	0.77
57	u(12)=.3, p<.05		Unknown										<	0.05	
58	v(12)=.3, p<.05		Unknown										<	0.05	
59	w(12)=.3, p<.05		Unknown										<	0.05	
60	x(12)=.3, p<.05		Chi2	=	0.30	12.00							<	0.05	1.00
61	y(12)=.3, p<.05		Unknown										<	0.05	
62	z(12)=.3, p<.05		Z	=	0.30								<	0.05	0.76
63	A2(12)=.3, p<.05		Unknown										<	0.05	
64	B2(12)=.3, p<.05		Unknown										<	0.05	
65	C2(12)=.3, p<.05		Unknown										<	0.05	
66	D2(12)=.3, p<.05		Unknown										<	0.05	
67	E2(12)=.3, p<.05		Unknown										<	0.05	
68	F2(12)=.3, p<.05		Unknown										<	0.05	
69	G2(12)=.3, p<.05		G2	=	0.30	12.00							<	0.05	1.00
70	H2(12)=.3, p<.05		H	=	0.30	12.00							<	0.05	1.00
71	I2(12)=.3, p<.05		Unknown										<	0.05	
72	J2(12)=.3, p<.05		Unknown										<	0.05	
73	K2(12)=.3, p<.05		Unknown										<	0.05	
74	L2(12)=.3, p<.05		Unknown										<	0.05	
75	M2(12)=.3, p<.05		Unknown										<	0.05	
76	N2(12)=.3, p<.05		Unknown										<	0.05	
77	O2(12)=.3, p<.05		Unknown										<	0.05	
78	P2(12)=.3, p<.05		Unknown										<	0.05	
79	Q2(12)=.3, p<.05		Q	=	0.30	12.00							<	0.05	1.00
80	R2(12)=.3, p<.05		R2	=	0.30								<	0.05	
81	S2(12)=.3, p<.05		Unknown										<	0.05	
82	T2(12)=.3, p<.05		Unknown										<	0.05	
83	U2(12)=.3, p<.05		Unknown										<	0.05	
84	V2(12)=.3, p<.05		Unknown										<	0.05	
85	W2(12)=.3, p<.05		Unknown										<	0.05	
86	X2(12)=.3, p<.05		Chi2	=	0.30	12.00							<	0.05	1.00
87	Y2(12)=.3, p<.05		Unknown										<	0.05	
88	Z2(12)=.3, p<.05		Unknown										<	0.05	
89	a2(12)=.3, p<.05		Unknown										<	0.05	
90	b2(12)=.3, p<.05		Unknown										<	0.05	
91	c2(12)=.3, p<.05		Unknown										<	0.05	
92	d2(12)=.3, p<.05		Unknown										<	0.05	
93	e2(12)=.3, p<.05		Unknown										<	0.05	
94	f2(12)=.3, p<.05		Unknown										<	0.05	
95	g2(12)=.3, p<.05		Unknown										<	0.05	
96	h2(12)=.3, p<.05		Unknown										<	0.05	
97	i2(12)=.3, p<.05		Unknown										<	0.05	
98	j2(12)=.3, p<.05		Unknown										<	0.05	
99	k2(12)=.3, p<.05		Unknown										<	0.05	
100	l2(12)=.3, p<.05		Unknown										<	0.05	
101	m2(12)=.3, p<.05		Unknown										<	0.05	
102	n2(12)=.3, p<.05		Unknown										<	0.05	
103	o2(12)=.3, p<.05		Unknown										<	0.05	
104	p2(12)=.3, p<.05		Unknown										<	0.05	
105	q2(12)=.3, p<.05		Unknown										<	0.05	
106	r2(12)=.3, p<.05		R2	=	0.30								<	0.05	
107	s2(12)=.3, p<.05		Unknown										<	0.05	
108	t2(12)=.3, p<.05		t	=	0.30	12.00							<	0.05	0.77
109	u2(12)=.3, p<.05		Unknown										<	0.05	
110	v2(12)=.3, p<.05		Unknown										<	0.05	
111	w2(12)=.3, p<.05		Unknown										<	0.05	
112	x2(12)=.3, p<.05		Chi2	=	0.30	12.00							<	0.05	1.00
113	y2(12)=.3, p<.05		Unknown										<	0.05	
114	z2(12)=.3, p<.05		Unknown										<	0.05	
115	A^2(12)=.3, p<.05		Unknown										<	0.05	
116	B^2(12)=.3, p<.05		Unknown										<	0.05	
117	C^2(12)=.3, p<.05		Unknown										<	0.05	
118	D^2(12)=.3, p<.05		Unknown										<	0.05	
119	E^2(12)=.3, p<.05		Unknown										<	0.05	
120	F^2(12)=.3, p<.05		Unknown										<	0.05	
121	G^2(12)=.3, p<.05		G2	=	0.30	12.00							<	0.05	1.00
122	H^2(12)=.3, p<.05		H	=	0.30	12.00							<	0.05	1.00
123	I^2(12)=.3, p<.05		Unknown										<	0.05	
124	J^2(12)=.3, p<.05		Unknown										<	0.05	
125	K^2(12)=.3, p<.05		Unknown										<	0.05	
126	L^2(12)=.3, p<.05		Unknown										<	0.05	
127	M^2(12)=.3, p<.05		Unknown										<	0.05	
128	N^2(12)=.3, p<.05		Unknown										<	0.05	
129	O^2(12)=.3, p<.05		Unknown										<	0.05	
130	P^2(12)=.3, p<.05		Unknown										<	0.05	
131	Q^2(12)=.3, p<.05		Q	=	0.30	12.00							<	0.05	1.00
132	R^2(12)=.3, p<.05		R2	=	0.30								<	0.05	
133	S^2(12)=.3, p<.05		Unknown										<	0.05	
134	T^2(12)=.3, p<.05		Unknown										<	0.05	
135	U^2(12)=.3, p<.05		Unknown										<	0.05	
136	V^2(12)=.3, p<.05		Unknown										<	0.05	
137	W^2(12)=.3, p<.05		Unknown										<	0.05	
138	X^2(12)=.3, p<.05		Chi2	=	0.30	12.00							<	0.05	1.00
139	Y^2(12)=.3, p<.05		Unknown										<	0.05	
140	Z^2(12)=.3, p<.05		Unknown										<	0.05	
141	a^2(12)=.3, p<.05		Unknown										<	0.05	
142	b^2(12)=.3, p<.05		Unknown										<	0.05	
143	c^2(12)=.3, p<.05		Unknown										<	0.05	
144	d^2(12)=.3, p<.05		Unknown										<	0.05	
145	e^2(12)=.3, p<.05		Unknown										<	0.05	
146	f^2(12)=.3, p<.05		Unknown										<	0.05	
147	g^2(12)=.3, p<.05		Unknown										<	0.05	
148	h^2(12)=.3, p<.05		Unknown										<	0.05	
149	i^2(12)=.3, p<.05		Unknown										<	0.05	
150	j^2(12)=.3, p<.05		Unknown										<	0.05	
151	k^2(12)=.3, p<.05		Unknown										<	0.05	
152	l^2(12)=.3, p<.05		Unknown										<	0.05	
153	m^2(12)=.3, p<.05		Unknown										<	0.05	
154	n^2(12)=.3, p<.05		Unknown										<	0.05	
155	o^2(12)=.3, p<.05		Unknown										<	0.05	
156	p^2(12)=.3, p<.05		Unknown										<	0.05	
157	q^2(12)=.3, p<.05		Unknown										<	0.05	
158	r^2(12)=.3, p<.05		R2	=	0.30								<	0.05	
159	s^2(12)=.3, p<.05		Unknown										<	0.05	
160	t^2(12)=.3, p<.05		t	=	0.30	12.00							<	0.05	0.77
161	u^2(12)=.3, p<.05		Unknown										<	0.05	
162	v^2(12)=.3, p<.05		Unknown										<	0.05	
163	w^2(12)=.3, p<.05		Unknown										<	0.05	
164	x^2(12)=.3, p<.05		Chi2	=	0.30	12.00							<	0.05	1.00
165	y^2(12)=.3, p<.05		Unknown										<	0.05	
166	z^2(12)=.3, p<.05		Unknown										<	0.05	
167	χ²(12)=3.4, p<.05		Chi2	=	3.40	12.00							<	0.05	0.99
168	χ<sup>2</sup>(12)=3.4, p<.05		Chi2	=	3.40	12.00							<	0.05	0.99
169	t=.12, p=.34		t	=	0.12								=	0.34	
170	p=.12		POnly										=	0.12	
171	t(12)=1.2, d=3.4, p=.56		t	=	1.20	12.00		3.40					=	0.56	0.25
172	t(12)=1.2; p=.34		t	=	1.20	12.00							=	0.34	0.25
173	t(12)=1.2 p=.34		t	=	1.20	12.00							=	0.34	0.25
174	t=1.2, df=34, p=.56		t	=	1.20	34.00							=	0.56	0.24
175	t(12)=1.2^3, p=4/5		t	=	1.73	12.00							=	0.80	0.11
176	t(12)=1..2, p=.n3		t	=	1.00	12.00							=		0.34
177	t index(12)=1.2, p=.34		t	=	1.20	12.00							=	0.34	0.25
178	r(12)=1.2, p=3.45, R^2=6.7		r	=	1.20	12.00						6.70	=	3.45	
179	beta=1.2, SE=.34, p<.05		BetaSE	=	3.53				1.20	0.34	3.53		<	0.05	0.00
180	t(12)=1.2, p=5%		t	=	1.20	12.00							=	0.05	0.25
181	all t's(12)>1.2, p's>.05		t	>	1.20	12.00							>	0.05	0.25
182	t(12)≤1.2, p≥.05		t	<=	1.20	12.00							>=	0.05	0.25
183	t[12]=1.2, p<.05		t	=	1.20	12.00							<	0.05	0.25
184	t(1,234)=5.6, p<.05		t	=	5.60	1234.00							<	0.05	0.00
185	t(12)=1.2,  p<.05		t	=	1.20	12.00							<	0.05	0.25
186	t(12)=.34, n. s.		t	=	0.34	12.00							ns		0.74
187	t(12) 1.2, p 5 .34		t	<=>	1.20	12.00							=	0.34	0.25
)corpus";

inline constexpr std::uint64_t kCorpusChecksum = 0xde3ccbd1632e4808ULL;

} // namespace statex::detail

#endif
