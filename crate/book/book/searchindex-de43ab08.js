window.search = Object.assign(window.search, JSON.parse('{"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}},"doc_urls":["introduction.html#introduction","getting-started.html#getting-started","vectors-and-streams.html#vectors-and-random-streams","vectors-and-streams.html#vectors","vectors-and-streams.html#splittable-streams","compressors.html#compression-operators","compressors.html#the-zoo","compressors.html#checking-the-contract","maps-and-certificates.html#fixed-point-maps-and-certificates","maps-and-certificates.html#problems","maps-and-certificates.html#applying-a-map","maps-and-certificates.html#contraction-certificates","iteration-engine.html#the-iteration-engine","iteration-engine.html#plain-mode","iteration-engine.html#variance-reduced-mode","iteration-engine.html#the-lyapunov-value","iteration-engine.html#running-a-full-loop","theory.html#the-theory-calculator","theory.html#plain-mode-linear-to-a-ball","theory.html#variance-reduced-mode-linear-period","theory.html#the-geometric-backbone","network-accounting.html#network-and-bit-accounting","network-accounting.html#bits-to-target","experiments.html#running-experiments","experiments.html#programmatic-runs","experiments.html#what-the-summary-holds","experiments.html#the-trajectory-csv"],"index":{"fields":["title","body","breadcrumbs"],"pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5","index":{"body":{"root":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":2.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"22":{"tf":1.4142135623730951},"24":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":14,",":{"docs":{},"df":0,"1":{"docs":{"20":{"tf":1.4142135623730951}},"df":1},"8":{"docs":{"7":{"tf":1.0}},"df":1}},".":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"6":{"tf":1.0}},"df":1}}}},"0":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"6":{"tf":1.7320508075688772}},"df":9},"1":{"docs":{"11":{"tf":1.0},"16":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":6,"2":{"docs":{},"df":0,"5":{"docs":{"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":3}}},"2":{"docs":{},"df":0,"5":{"docs":{"20":{"tf":1.0}},"df":1}},"5":{"docs":{"10":{"tf":1.7320508075688772},"13":{"tf":1.0},"14":{"tf":1.7320508075688772},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0},"6":{"tf":1.0}},"df":8,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"11":{"tf":1.0}},"df":1}}}},"6":{"docs":{},"df":0,"2":{"docs":{},"df":0,"5":{"docs":{"20":{"tf":1.0}},"df":1}}}},"7":{"docs":{},"df":0,"5":{"docs":{"18":{"tf":1.0}},"df":1}}}},"1":{"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":2.8284271247461903},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.7320508075688772},"16":{"tf":1.7320508075688772},"18":{"tf":1.7320508075688772},"19":{"tf":2.6457513110645907},"20":{"tf":1.0},"21":{"tf":2.0},"22":{"tf":1.7320508075688772},"23":{"tf":2.0},"24":{"tf":1.0},"4":{"tf":1.7320508075688772},"6":{"tf":1.7320508075688772},"7":{"tf":1.0}},"df":17,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}},",":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"4":{"docs":{},"df":0,".":{"docs":{},"df":0,"7":{"docs":{},"df":0,"1":{"docs":{},"df":0,"5":{"docs":{},"df":0,"4":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"5":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"3":{"docs":{},"df":0,"7":{"docs":{},"df":0,"5":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"1":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"1":{"docs":{},"df":0,"7":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,".":{"docs":{},"df":0,"4":{"docs":{},"df":0,"3":{"docs":{},"df":0,"9":{"docs":{},"df":0,"3":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"5":{"docs":{},"df":0,"9":{"docs":{},"df":0,"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{},"df":0,"3":{"docs":{},"df":0,"6":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"2":{"docs":{"10":{"tf":1.0}},"df":1}},".":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":2.0},"11":{"tf":1.4142135623730951},"14":{"tf":2.0},"16":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"22":{"tf":1.7320508075688772},"6":{"tf":1.0}},"df":9}},"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"19":{"tf":1.0},"23":{"tf":1.0}},"df":2}},"2":{"docs":{"11":{"tf":1.0},"7":{"tf":1.0}},"df":2},"4":{"docs":{"18":{"tf":1.0}},"df":1},"8":{"docs":{"18":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951}},"df":2},"l":{"docs":{"11":{"tf":1.0},"23":{"tf":1.0}},"df":2}},"0":{"docs":{"23":{"tf":1.0},"9":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}},".":{"docs":{},"df":0,"0":{"docs":{"9":{"tf":1.0}},"df":1}},"0":{"docs":{"23":{"tf":1.0}},"df":1}},"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"19":{"tf":1.0}},"df":1}}},"2":{"docs":{"19":{"tf":1.4142135623730951},"23":{"tf":1.0},"9":{"tf":1.7320508075688772}},"df":3,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}},"5":{"docs":{"19":{"tf":1.7320508075688772}},"df":1},"7":{"docs":{"26":{"tf":1.0}},"df":1},"e":{"docs":{"11":{"tf":1.0},"19":{"tf":1.7320508075688772},"22":{"tf":1.0},"3":{"tf":1.0}},"df":4,"1":{"docs":{},"df":0,"2":{"docs":{"16":{"tf":1.0}},"df":1}}}},"2":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"18":{"tf":3.0},"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":2.8284271247461903},"23":{"tf":1.0},"24":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":11,".":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"6":{"tf":1.7320508075688772}},"df":12}},"0":{"docs":{"23":{"tf":1.4142135623730951},"25":{"tf":1.0}},"df":2,"1":{"docs":{"21":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":2},"4":{"docs":{},"df":0,"8":{"docs":{"23":{"tf":1.0}},"df":1}}},"5":{"docs":{"7":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"0":{"docs":{"3":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}},"^":{"docs":{},"df":0,"a":{"docs":{"6":{"tf":2.0}},"df":1},"{":{"docs":{},"df":0,"a":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"6":{"tf":1.7320508075688772}},"df":1}}}}}},"3":{"docs":{"1":{"tf":1.0},"21":{"tf":1.4142135623730951},"23":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":6,".":{"docs":{},"df":0,"0":{"docs":{"20":{"tf":1.0},"22":{"tf":1.0},"6":{"tf":1.0}},"df":3,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"5":{"docs":{"20":{"tf":1.0}},"df":1}},"0":{"docs":{"3":{"tf":1.0}},"df":1},"2":{"docs":{"3":{"tf":1.0}},"df":1},"6":{"docs":{"6":{"tf":1.0}},"df":1}},"4":{"docs":{"15":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.7320508075688772},"6":{"tf":1.0}},"df":4,".":{"docs":{},"df":0,"0":{"docs":{"20":{"tf":1.4142135623730951},"3":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":4}},"/":{"docs":{},"df":0,"3":{"docs":{"6":{"tf":1.0}},"df":1}},"0":{"docs":{"24":{"tf":1.0}},"df":1,"0":{"docs":{"22":{"tf":1.0},"23":{"tf":1.0}},"df":2}}},"5":{"docs":{},"df":0,"0":{"docs":{"16":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"1":{"docs":{"16":{"tf":1.0}},"df":1,"2":{"docs":{"21":{"tf":1.0}},"df":1}}},"6":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{"7":{"tf":1.0}},"df":1}},"0":{"docs":{"24":{"tf":1.0},"9":{"tf":1.0}},"df":2},"1":{"docs":{"24":{"tf":1.0}},"df":1},"4":{"docs":{"11":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.7320508075688772}},"df":6,"0":{"docs":{"6":{"tf":1.0}},"df":1}}},"7":{"docs":{"24":{"tf":1.0}},"df":1,"7":{"docs":{},"df":0,"7":{"docs":{"23":{"tf":1.0}},"df":1}}},"8":{"docs":{"11":{"tf":1.0},"16":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"24":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":7,".":{"docs":{},"df":0,"0":{"docs":{"19":{"tf":1.0},"22":{"tf":1.0}},"df":2}}},"9":{"docs":{"11":{"tf":1.0},"6":{"tf":1.0}},"df":2,".":{"docs":{},"df":0,"0":{"docs":{"22":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"9":{"docs":{"9":{"tf":1.0}},"df":1}}},"_":{"docs":{"14":{"tf":1.0},"6":{"tf":1.0}},"df":2,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}},"a":{"docs":{},"df":0,"^":{"docs":{},"df":0,"k":{"docs":{"20":{"tf":1.0}},"df":1}},"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"25":{"tf":1.4142135623730951}},"df":2}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"20":{"tf":1.0},"26":{"tf":1.0},"3":{"tf":1.0}},"df":5}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"d":{"docs":{"21":{"tf":1.0},"5":{"tf":1.0}},"df":2},"j":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"6":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"14":{"tf":1.0},"23":{"tf":1.4142135623730951}},"df":4}}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"19":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"7":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"21":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":3}}}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"9":{"tf":1.0}},"df":17}}}}}}}},"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{"14":{"tf":2.23606797749979},"15":{"tf":1.0},"19":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"25":{"tf":1.0}},"df":7}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"4":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"4":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"25":{"tf":1.0}},"df":3,"c":{"docs":{"10":{"tf":1.0}},"df":1}},"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}},"r":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}},"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"!":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}},"(":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}},"m":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"8":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"k":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}},"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"a":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"]":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"y":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"a":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}},"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"22":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"b":{"docs":{"11":{"tf":1.0}},"df":1},"c":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{"11":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"6":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"(":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"4":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"(":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"k":{"docs":{"6":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"5":{"docs":{"20":{"tf":1.0}},"df":1},"7":{"docs":{},"df":0,"5":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"_":{"docs":{},"df":0,"w":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"h":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"x":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"x":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}},"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"24":{"tf":1.0}},"df":1}}}},"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"k":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}},"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"a":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}},"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}},"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}},"y":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}},"[":{"docs":{},"df":0,"1":{"docs":{"6":{"tf":1.0}},"df":1},"2":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"a":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}},"x":{"docs":{},"df":0,".":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"u":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"m":{"docs":{"4":{"tf":1.0}},"df":1,"p":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0}},"df":2}}}}}},"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{"23":{"tf":2.23606797749979},"24":{"tf":1.4142135623730951}},"df":2}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0}},"df":2}}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"16":{"tf":1.0}},"df":1}}},"x":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.0}},"df":1}}},"b":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.7320508075688772},"19":{"tf":1.7320508075688772},"25":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":11,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}},"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"20":{"tf":1.0}},"df":1}}},"0":{"docs":{"20":{"tf":1.4142135623730951}},"df":1},"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"14":{"tf":1.0},"24":{"tf":1.0}},"df":2}},"d":{"docs":{"23":{"tf":1.0},"3":{"tf":1.0}},"df":2},"l":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0}},"df":2}}},"e":{"docs":{"8":{"tf":1.0}},"df":1,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"6":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0}},"df":2}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"1":{"tf":1.0},"22":{"tf":1.7320508075688772}},"df":2}}},"t":{"docs":{},"df":0,"a":{"docs":{"11":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,"^":{"docs":{},"df":0,"2":{"docs":{"11":{"tf":1.0}},"df":1}}},"^":{"docs":{},"df":0,"2":{"docs":{"11":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0}},"df":1}}}},"t":{"docs":{"13":{"tf":1.4142135623730951},"21":{"tf":2.0},"22":{"tf":1.4142135623730951},"24":{"tf":1.0},"26":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0}},"df":9,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"24":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"h":{"docs":{"12":{"tf":1.0},"20":{"tf":1.0},"7":{"tf":1.0}},"df":3}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.4142135623730951},"20":{"tf":1.0},"25":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":5}}},"x":{"docs":{},"df":0,"<":{"docs":{},"df":0,"d":{"docs":{},"df":0,"y":{"docs":{},"df":0,"n":{"docs":{"24":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"21":{"tf":1.4142135623730951}},"df":2,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"x":{"docs":{"21":{"tf":1.4142135623730951}},"df":1}}}}}}}}},"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.4142135623730951},"20":{"tf":1.0},"24":{"tf":1.0}},"df":3},"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"26":{"tf":1.0}},"df":2}}}},"c":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}},"df":3,"(":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"k":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}}}}}},".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"u":{"docs":{"9":{"tf":1.0}},"df":1}}},"^":{"docs":{},"df":0,"2":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":2.0},"19":{"tf":1.4142135623730951},"23":{"tf":1.0},"25":{"tf":1.0}},"df":7}},"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0}},"df":2}}},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{"1":{"tf":1.7320508075688772}},"df":1}},"l":{"docs":{},"df":0,"o":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.4142135623730951},"15":{"tf":1.0},"7":{"tf":1.0}},"df":5}},"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.4142135623730951},"2":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0}},"df":4}}},"s":{"docs":{},"df":0,"e":{"docs":{"6":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"2":{"docs":{"6":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"s":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}},"r":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0}},"df":3,"i":{"docs":{},"df":0,"f":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"11":{"tf":1.0},"17":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":8,"i":{"docs":{"11":{"tf":1.0},"8":{"tf":1.0}},"df":2,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"g":{"docs":{"24":{"tf":1.0}},"df":1}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"g":{"docs":{"21":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"k":{"docs":{"1":{"tf":1.4142135623730951},"11":{"tf":1.0},"7":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}},"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"i":{"docs":{"1":{"tf":1.4142135623730951},"24":{"tf":1.0}},"df":2},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.0}},"df":4,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0}},"df":2}},"l":{"docs":{"23":{"tf":1.4142135623730951},"24":{"tf":1.0}},"df":2,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"n":{"docs":{"26":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"26":{"tf":1.0},"7":{"tf":1.0}},"df":5}}},"p":{"docs":{"16":{"tf":1.7320508075688772},"21":{"tf":1.7320508075688772},"22":{"tf":1.7320508075688772}},"df":3,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.0}},"df":3,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}}}}}},"i":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":3.3166247903554},"1":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":2.0},"16":{"tf":1.4142135623730951},"18":{"tf":1.7320508075688772},"19":{"tf":1.0},"21":{"tf":1.7320508075688772},"22":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":13,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"17":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.0}},"df":6,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"6":{"tf":1.0},"7":{"tf":1.0}},"df":2,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"k":{"docs":{"21":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}}}}}}}},"’":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0}},"df":3}}}},"n":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.4142135623730951},"24":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.4142135623730951},"18":{"tf":1.0},"9":{"tf":1.7320508075688772}},"df":3}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"1":{"tf":2.0},"25":{"tf":1.0}},"df":2,"s":{"docs":{},"df":0,"/":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"l":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"d":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"18":{"tf":1.0},"23":{"tf":1.0}},"df":4}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.7320508075688772},"25":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":6}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"m":{"docs":{"11":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":3}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.7320508075688772},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":7,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"11":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0}},"df":3}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.7320508075688772},"11":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"5":{"tf":1.0}},"df":6}},"x":{"docs":{"9":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.7320508075688772}},"df":1}}}}},"p":{"docs":{},"df":0,"i":{"docs":{"21":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.4142135623730951},"22":{"tf":1.7320508075688772},"7":{"tf":1.0}},"df":3}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0}},"df":3}},"p":{"docs":{},"df":0,"l":{"docs":{"15":{"tf":1.0}},"df":1}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{"18":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.7320508075688772}},"df":1}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0}},"df":3}}}},"s":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0},"1":{"tf":1.7320508075688772},"21":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0}},"df":6}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"v":{"docs":{"1":{"tf":1.0}},"df":1}}}},"d":{"docs":{"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"6":{"tf":2.23606797749979},"7":{"tf":1.0}},"df":4,"/":{"docs":{},"df":0,"k":{"docs":{"6":{"tf":1.4142135623730951}},"df":1}},"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":3}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"y":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"23":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"1":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"p":{"docs":{"22":{"tf":1.0}},"df":1}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}},"v":{"docs":{"21":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"a":{"docs":{"14":{"tf":1.4142135623730951}},"df":1,"_":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.4142135623730951},"14":{"tf":2.449489742783178}},"df":2}}}}},"m":{"docs":{},"df":0,"o":{"docs":{"24":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"s":{"docs":{"14":{"tf":1.0},"2":{"tf":1.0}},"df":2}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"11":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":2}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"11":{"tf":1.0},"8":{"tf":1.0}},"df":4}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{"0":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"6":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.7320508075688772},"15":{"tf":1.0}},"df":4}}}}}}}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1}}}},"i":{"docs":{"0":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":3}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"26":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1}}}},"r":{"docs":{"1":{"tf":1.0},"24":{"tf":1.4142135623730951}},"df":2,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{"20":{"tf":1.0},"22":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.4142135623730951},"21":{"tf":1.0}},"df":2}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"15":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.0}},"df":3}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"1":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"25":{"tf":1.0},"3":{"tf":1.0}},"df":5}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"d":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"(":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0}},"df":3}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0}},"df":2}}}}},"w":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"3":{"tf":1.0}},"df":4}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"w":{"docs":{"4":{"tf":1.7320508075688772}},"df":1}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"3":{"tf":1.0}},"df":3}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0}},"df":1}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0}},"df":3,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"(":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0}},"df":3}}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"g":{"docs":{"25":{"tf":1.0}},"df":1}},"[":{"docs":{},"df":0,"c":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"5":{"tf":1.0}},"df":1}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":8}},"r":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"26":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"7":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"11":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"25":{"tf":1.0},"3":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.4142135623730951}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"20":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0}},"df":1,"o":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.7320508075688772},"18":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"25":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":8}}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"11":{"tf":1.0},"25":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":4,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{"7":{"tf":1.0}},"df":1,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{"14":{"tf":2.23606797749979},"19":{"tf":2.449489742783178},"22":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"25":{"tf":1.0}},"df":6,"^":{"docs":{},"df":0,"2":{"docs":{"15":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0}},"df":3}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0}},"df":5}},"w":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"9":{"tf":1.0}},"df":5,"l":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0},"15":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":7}}}}},"c":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0}},"df":1},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}},"t":{"docs":{"1":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"18":{"tf":1.0}},"df":3}},"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"23":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"s":{"docs":{"20":{"tf":1.0}},"df":1}}}},"|":{"docs":{},"df":0,"|":{"docs":{},"df":0,"c":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"5":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"h":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"k":{"docs":{"15":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"11":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}},"f":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"10":{"tf":1.0}},"df":1}},"6":{"docs":{},"df":0,"4":{"docs":{"2":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"8":{"tf":1.0}},"df":1}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0},"25":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}},"i":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0}},"df":2}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,"’":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.4142135623730951}},"df":1}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.0},"25":{"tf":1.0}},"df":2}}},"l":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0}},"df":2},"l":{"docs":{"26":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1},"i":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":4}}},"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.4142135623730951},"22":{"tf":1.0},"4":{"tf":1.0}},"df":3}}},"v":{"docs":{},"df":0,"e":{"docs":{"8":{"tf":1.0}},"df":1}},"x":{"docs":{"0":{"tf":2.23606797749979},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"24":{"tf":1.0},"6":{"tf":1.0}},"df":8}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"11":{"tf":1.0},"25":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0},"26":{"tf":1.0},"3":{"tf":1.4142135623730951}},"df":3}},"o":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}},"n":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"9":{"tf":1.0}},"df":17},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"11":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.0}},"df":4,"a":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":2.8284271247461903},"11":{"tf":1.0}},"df":3,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}},"{":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"16":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"6":{"tf":1.0}},"df":6}}}}}}}}}}}}}},"{":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"23":{"tf":1.0},"24":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":12}}}},"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"11":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}}},"{":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"22":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":7}}}}}}}}},"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0}},"df":2}}}}}}}}},"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"22":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"k":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}},"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"x":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"{":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}},"v":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"14":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}}}},"{":{"docs":{},"df":0,"v":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"h":{"docs":{"10":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0},"18":{"tf":1.4142135623730951}},"df":2}}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}},"df":3}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}}}}}},"g":{"docs":{"11":{"tf":1.0},"8":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"10":{"tf":1.0},"11":{"tf":2.449489742783178},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.4142135623730951},"25":{"tf":1.0},"8":{"tf":1.0}},"df":9,"^":{"docs":{},"df":0,"2":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.7320508075688772}},"df":1,"(":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"8":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"d":{"docs":{"23":{"tf":1.7320508075688772},"24":{"tf":1.0},"8":{"tf":1.0}},"df":3,"a":{"docs":{"23":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"9":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"(":{"docs":{},"df":0,"4":{"docs":{},"df":0,"0":{"docs":{"11":{"tf":1.0},"16":{"tf":1.0},"22":{"tf":1.0}},"df":3}},"6":{"docs":{},"df":0,"0":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}},"t":{"docs":{"0":{"tf":1.0},"22":{"tf":1.0},"9":{"tf":1.0}},"df":3}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"o":{"docs":{"1":{"tf":1.0}},"df":1,"e":{"docs":{"16":{"tf":1.0}},"df":1},"n":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"8":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"11":{"tf":1.7320508075688772},"23":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":6}}}}},"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}}}},"h":{"docs":{"11":{"tf":1.0},"14":{"tf":1.7320508075688772},"8":{"tf":1.4142135623730951}},"df":3,"0":{"docs":{"16":{"tf":1.0},"22":{"tf":1.0}},"df":2},"_":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"14":{"tf":1.4142135623730951}},"df":2,"k":{"docs":{"14":{"tf":2.0}},"df":1}},"{":{"docs":{},"df":0,"i":{"docs":{},"df":0,",":{"docs":{},"df":0,"k":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}},"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"d":{"docs":{"21":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"h":{"docs":{"4":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.0},"4":{"tf":1.7320508075688772},"6":{"tf":1.0}},"df":5,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":2.0}},"df":1}}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"3":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"25":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":2.8284271247461903},"1":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.7320508075688772},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"25":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.7320508075688772},"5":{"tf":1.0}},"df":19,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951}},"df":2}}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"’":{"docs":{"10":{"tf":1.0},"4":{"tf":1.0}},"df":2}},"k":{"docs":{"1":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"26":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"6":{"tf":2.0},"7":{"tf":1.4142135623730951}},"df":11,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{"9":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"6":{"tf":1.0}},"df":4}},"p":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}},"y":{"docs":{"23":{"tf":1.7320508075688772},"4":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":2.449489742783178},"24":{"tf":1.7320508075688772},"6":{"tf":1.0}},"df":3}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"14":{"tf":1.0}},"df":1,"n":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}},"l":{"docs":{"11":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"22":{"tf":1.4142135623730951}},"df":3,"1":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0}},"df":2},"2":{"docs":{"10":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"w":{"docs":{"11":{"tf":1.0}},"df":1}}},"^":{"docs":{},"df":0,"2":{"docs":{"11":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"6":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}},"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"20":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"s":{"docs":{"22":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":5}}}},"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":2.0},"17":{"tf":1.0},"19":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":6}}}},"s":{"docs":{},"df":0,"v":{"docs":{},"df":0,"m":{"docs":{"23":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"25":{"tf":1.0}},"df":2}}},"n":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0}},"df":3,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"9":{"tf":1.0}},"df":3,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0}},"df":3}}}}}},"p":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"z":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0}},"df":3}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}}},"g":{"docs":{"1":{"tf":1.0}},"df":1},"n":{"docs":{},"df":0,"g":{"docs":{"22":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"k":{"docs":{"6":{"tf":1.0}},"df":1},"p":{"docs":{"12":{"tf":1.0},"21":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"s":{"docs":{"21":{"tf":1.0}},"df":1,"i":{"docs":{"0":{"tf":1.0}},"df":1},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"14":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}}},"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0}},"df":1}}}},"w":{"docs":{"2":{"tf":1.0}},"df":1}},"y":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}},"m":{"docs":{"7":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}},"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{"3":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"9":{"tf":1.0}},"df":17}},"k":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"17":{"tf":1.0}},"df":3}},"n":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0}},"df":1}},"p":{"docs":{"0":{"tf":2.0},"10":{"tf":2.0},"11":{"tf":2.23606797749979},"13":{"tf":1.7320508075688772},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.7320508075688772},"22":{"tf":1.7320508075688772},"23":{"tf":1.7320508075688772},"24":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":15,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"13":{"tf":1.4142135623730951}},"df":1}}}}}}},"k":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"22":{"tf":1.0}},"df":5}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"22":{"tf":1.0}},"df":6,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"k":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"g":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"22":{"tf":1.0}},"df":6}}}}}}}}}}}}}}}}}}}}},"’":{"docs":{"18":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.7320508075688772},"21":{"tf":1.7320508075688772}},"df":4}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"9":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}},"x":{"docs":{"9":{"tf":1.0}},"df":1}},"c":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}},"df":4}}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"25":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":5,"_":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0}},"df":3}}},"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0}},"df":4}}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"1":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":5,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"8":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":2.23606797749979}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"19":{"tf":1.0},"23":{"tf":1.0}},"df":2},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{"19":{"tf":1.4142135623730951}},"df":1}}}}},"d":{"docs":{},"df":0,"/":{"docs":{},"df":0,"s":{"docs":{},"df":0,"^":{"docs":{},"df":0,"2":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"8":{"tf":1.4142135623730951}},"df":1}}}}},"m":{"docs":{"10":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"23":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.7320508075688772},"22":{"tf":1.7320508075688772},"23":{"tf":1.4142135623730951},"24":{"tf":1.0}},"df":6,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"v":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}},"l":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"21":{"tf":1.7320508075688772},"22":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":5}},"u":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.4142135623730951},"15":{"tf":1.0},"7":{"tf":1.0}},"df":5,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0}},"df":2}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"22":{"tf":1.0}},"df":1}}},"v":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0}},"df":1}}},"u":{"docs":{"11":{"tf":1.4142135623730951}},"df":1,")":{"docs":{},"df":0,"^":{"docs":{},"df":0,"2":{"docs":{"11":{"tf":1.0}},"df":1}}},"/":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0}},"df":1}},"c":{"docs":{},"df":0,"h":{"docs":{"22":{"tf":1.0},"4":{"tf":1.0}},"df":2}},"t":{"docs":{"10":{"tf":1.0},"11":{"tf":1.7320508075688772},"13":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"21":{"tf":2.449489742783178},"22":{"tf":1.4142135623730951},"4":{"tf":2.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":10}}},"n":{"docs":{"12":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":2.23606797749979},"19":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":1.0}},"df":8,"^":{"docs":{},"df":0,"2":{"docs":{"15":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"d":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0}},"df":3}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"e":{"docs":{"23":{"tf":1.0}},"df":1}},"n":{"docs":{"3":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0},"23":{"tf":1.7320508075688772},"24":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":5}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.4142135623730951}},"df":1}},"e":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":3}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"w":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"16":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0}},"df":3}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"22":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":4}}},"w":{"docs":{},"df":0,"_":{"docs":{},"df":0,"w":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"x":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951},"23":{"tf":1.0},"4":{"tf":1.7320508075688772},"9":{"tf":1.4142135623730951}},"df":12,"0":{"docs":{"4":{"tf":1.4142135623730951}},"df":1},"1":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}}},"i":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"4":{"tf":2.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":9,"i":{"docs":{"0":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"n":{"docs":{"16":{"tf":1.0},"3":{"tf":1.0}},"df":2,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}}}}},"e":{"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":3,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"m":{"docs":{"6":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0},"25":{"tf":1.4142135623730951}},"df":2},"h":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0},"22":{"tf":1.0}},"df":3}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.4142135623730951},"5":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":3}}},"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"y":{"docs":{"0":{"tf":1.0}},"df":1}}},"k":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":13},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{"0":{"tf":1.0},"15":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":2.6457513110645907},"19":{"tf":2.449489742783178},"22":{"tf":1.0},"23":{"tf":1.4142135623730951},"25":{"tf":1.0},"5":{"tf":2.0},"6":{"tf":1.0}},"df":10,"(":{"docs":{},"df":0,"2":{"docs":{"6":{"tf":1.0}},"df":1},"d":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.7320508075688772},"25":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}},"df":12,"t":{"docs":{},"df":0,"o":{"docs":{"6":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"3":{"tf":1.4142135623730951},"5":{"tf":1.0},"8":{"tf":1.0}},"df":5}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"16":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}},"df":4,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"s":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.7320508075688772}},"df":1}}}}}}}}}}},"/":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{"23":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"7":{"tf":1.7320508075688772}},"df":1}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.7320508075688772},"21":{"tf":1.0},"3":{"tf":1.0}},"df":4,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.4142135623730951},"24":{"tf":1.0}},"df":2}}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":6,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}},"p":{"docs":{"1":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"11":{"tf":1.0},"16":{"tf":1.0}},"df":2}}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"18":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"14":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951}},"df":2,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}},"s":{"docs":{"23":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}},"s":{"docs":{},"df":0,"v":{"docs":{"24":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"d":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"s":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{"18":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"21":{"tf":1.0}},"df":1}},"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}},"t":{"docs":{"18":{"tf":1.4142135623730951}},"df":1}},"t":{"docs":{},"df":0,"h":{"docs":{"4":{"tf":2.8284271247461903}},"df":1}},"y":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"21":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.7320508075688772},"22":{"tf":1.0},"25":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"df":12,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}},"n":{"docs":{"9":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.4142135623730951},"18":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.4142135623730951}},"df":8,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}},"n":{"docs":{"16":{"tf":1.4142135623730951},"22":{"tf":1.0}},"df":2,"t":{"docs":{"9":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0},"1":{"tf":1.7320508075688772},"11":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":7,"_":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"u":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}},"u":{"docs":{"16":{"tf":1.0},"25":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":2.449489742783178},"11":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.4142135623730951},"3":{"tf":1.0},"6":{"tf":1.0}},"df":8}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.4142135623730951}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"22":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"6":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":2}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.4142135623730951},"11":{"tf":1.7320508075688772},"13":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"18":{"tf":1.0},"22":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":12,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{"11":{"tf":1.0},"16":{"tf":1.0},"22":{"tf":1.0}},"df":3}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0}},"df":3,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"s":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"(":{"docs":{},"df":0,"s":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0}},"df":3}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"’":{"docs":{"23":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"3":{"tf":1.0}},"df":1}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"25":{"tf":1.0}},"df":4,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951}},"df":3}}}}}}}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}},"x":{"docs":{"11":{"tf":2.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"l":{"docs":{},"df":0,"1":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"g":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.0},"8":{"tf":1.0}},"df":2}}},"{":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0}},"df":2}}}}},"s":{"docs":{},"df":0,"i":{"docs":{"26":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"k":{"docs":{"15":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"18":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"h":{"docs":{"22":{"tf":1.0}},"df":1}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.4142135623730951}},"df":1,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0}},"df":3}}}}}}}}}}}},"r":{"docs":{"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}},"df":3,"0":{"docs":{"20":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":2},"^":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"0":{"docs":{"16":{"tf":1.0},"20":{"tf":1.0}},"df":2},"k":{"docs":{"16":{"tf":1.0},"20":{"tf":1.4142135623730951}},"df":2},"s":{"docs":{},"df":0,"q":{"docs":{"1":{"tf":1.0},"25":{"tf":1.0}},"df":2}},"{":{"docs":{},"df":0,"k":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1},"u":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"18":{"tf":1.4142135623730951},"25":{"tf":1.0}},"df":4}}},"n":{"docs":{"0":{"tf":1.0}},"df":1,"d":{"docs":{"22":{"tf":1.0},"7":{"tf":1.0}},"df":2,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}},"_":{"docs":{},"df":0,"k":{"docs":{"23":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0}},"df":7}}}},"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"25":{"tf":1.4142135623730951}},"df":4}},"w":{"docs":{"22":{"tf":1.0}},"df":1}},"e":{"docs":{"26":{"tf":1.0},"3":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"22":{"tf":1.4142135623730951}},"df":1}},"d":{"docs":{"0":{"tf":1.0}},"df":1,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{"4":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"22":{"tf":1.4142135623730951},"26":{"tf":1.0},"3":{"tf":1.0}},"df":6}}},"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"g":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"9":{"tf":1.0}},"df":6,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"3":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"9":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.4142135623730951}},"df":3}}}},"l":{"docs":{"5":{"tf":1.0},"6":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"x":{"docs":{"14":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"25":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"16":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"7":{"tf":1.0}},"df":7}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0},"26":{"tf":1.0}},"df":2}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"19":{"tf":1.0},"26":{"tf":1.0},"4":{"tf":1.0}},"df":3}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"4":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"1":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0}},"df":4}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0}},"df":2}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0},"26":{"tf":1.0}},"df":2}}}}},"h":{"docs":{},"df":0,"o":{"docs":{"0":{"tf":1.0},"11":{"tf":2.449489742783178},"17":{"tf":1.0},"18":{"tf":2.23606797749979},"19":{"tf":2.23606797749979},"23":{"tf":1.0},"25":{"tf":1.0}},"df":7}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"g":{"docs":{"8":{"tf":1.7320508075688772}},"df":1}}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"4":{"tf":1.4142135623730951}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.0},"14":{"tf":1.0}},"df":2},"1":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}},"1":{"docs":{"13":{"tf":1.0}},"df":1}},"3":{"docs":{"11":{"tf":1.0}},"df":1},"5":{"docs":{"16":{"tf":1.0},"22":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"[":{"docs":{},"df":0,"1":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}},"7":{"docs":{"4":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.7320508075688772}},"df":1}},"o":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"13":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":4,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{"4":{"tf":1.7320508075688772}},"df":1},"1":{"docs":{},"df":0,"]":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"[":{"docs":{},"df":0,"2":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"2":{"docs":{},"df":0,"]":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"[":{"docs":{},"df":0,"1":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0},"22":{"tf":1.0},"4":{"tf":1.0}},"df":3}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"18":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"26":{"tf":1.0},"6":{"tf":1.7320508075688772},"7":{"tf":1.0}},"df":9,",":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,",":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,",":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"w":{"docs":{"16":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951},"26":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":6}},"u":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":3.4641016151377544},"12":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":13,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"21":{"tf":1.0},"24":{"tf":1.0}},"df":2,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"f":{"docs":{},"df":0,"g":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"16":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.4142135623730951},"22":{"tf":1.0}},"df":2}}}}}}}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.4142135623730951},"22":{"tf":1.4142135623730951}},"df":2}}}}}}},"s":{"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"6":{"tf":1.0}},"df":3,")":{"docs":{},"df":0,"|":{"docs":{},"df":0,"|":{"docs":{},"df":0,"^":{"docs":{},"df":0,"2":{"docs":{"11":{"tf":1.0},"15":{"tf":1.0}},"df":2}}}}},"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"k":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0}},"df":2}},"k":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}},"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"23":{"tf":1.0},"8":{"tf":1.0}},"df":3}}},"m":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"4":{"tf":1.7320508075688772}},"df":3},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.7320508075688772}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}},"e":{"docs":{"10":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":2}},"n":{"docs":{"22":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.4142135623730951}},"df":1}}}},"e":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"1":{"tf":1.7320508075688772},"23":{"tf":1.7320508075688772},"24":{"tf":1.7320508075688772},"25":{"tf":2.0},"4":{"tf":1.0}},"df":6,",":{"docs":{},"df":0,"k":{"docs":{},"df":0,",":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,",":{"docs":{},"df":0,"p":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,",":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,",":{"docs":{},"df":0,"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"<":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,">":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}},"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0}},"df":2},"t":{"docs":{"14":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0},"22":{"tf":1.0}},"df":2}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"20":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}},"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0}},"df":2}},"g":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"23":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.7320508075688772},"15":{"tf":1.0}},"df":3}},"p":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":3}},"o":{"docs":{},"df":0,"w":{"docs":{"1":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0}},"df":1}},"g":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"^":{"docs":{},"df":0,"2":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.7320508075688772},"25":{"tf":1.0}},"df":5}},"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}}}}}}}}},"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"v":{"docs":{"6":{"tf":1.4142135623730951}},"df":1}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"26":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":6,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0},"5":{"tf":1.0}},"df":2},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}},"t":{"docs":{"20":{"tf":1.0},"22":{"tf":1.0}},"df":2}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"11":{"tf":1.0},"9":{"tf":1.0}},"df":2,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0}},"df":3}}}}}}}}}}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}},"v":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{"22":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"0":{"docs":{"19":{"tf":1.0}},"df":1}}},"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"4":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"7":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"c":{"docs":{"7":{"tf":1.0}},"df":1},"n":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":3,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}},"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"d":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951},"15":{"tf":1.0},"18":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":5}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0},"15":{"tf":1.0},"25":{"tf":1.0},"7":{"tf":1.0}},"df":4}}}}},"r":{"docs":{"21":{"tf":1.0}},"df":1,"t":{"docs":{"22":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"16":{"tf":1.0},"26":{"tf":1.0}},"df":4,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}},"y":{"docs":{"20":{"tf":1.0}},"df":1}},"d":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"f":{"docs":{},"df":0,"p":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}},"f":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.7320508075688772},"14":{"tf":1.0},"8":{"tf":1.7320508075688772}},"df":5,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}},"v":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"11":{"tf":1.0},"19":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.4142135623730951},"25":{"tf":1.0}},"df":7}}}}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":1.0},"25":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"11":{"tf":1.7320508075688772},"15":{"tf":1.0},"18":{"tf":1.0}},"df":4}}}}},"p":{"docs":{"3":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"10":{"tf":1.7320508075688772},"11":{"tf":1.7320508075688772},"16":{"tf":1.4142135623730951},"2":{"tf":1.0},"22":{"tf":1.4142135623730951},"4":{"tf":2.23606797749979},"6":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":9}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"9":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0}},"df":3}}}}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0}},"df":1}}}},"h":{"docs":{"11":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.4142135623730951},"11":{"tf":1.0},"7":{"tf":1.0}},"df":3}},"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0},"23":{"tf":1.0}},"df":2},"y":{"docs":{},"df":0,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"25":{"tf":1.0}},"df":2}}}}}}}}}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.7320508075688772},"24":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}}}},"t":{"docs":{"0":{"tf":1.0},"21":{"tf":1.7320508075688772}},"df":2,"(":{"docs":{},"df":0,"x":{"docs":{"0":{"tf":1.0},"14":{"tf":1.7320508075688772}},"df":2,"_":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0}},"df":1}}}},".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"_":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"2":{"docs":{"21":{"tf":1.4142135623730951}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}},"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0}},"df":2}}}},"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0}},"df":1}},"k":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0},"22":{"tf":1.0}},"df":2}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":2.0}},"df":1}}}}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"m":{"docs":{"11":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":2.0},"11":{"tf":1.0},"20":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0}},"df":6}},"x":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"11":{"tf":1.0},"17":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":7},"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{"24":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"7":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"1":{"tf":2.0},"11":{"tf":1.0},"8":{"tf":1.0}},"df":4},"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"16":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"23":{"tf":1.0},"4":{"tf":1.0}},"df":2,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"l":{"docs":{"23":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0}},"df":1}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"25":{"tf":1.0}},"df":1},"n":{"docs":{"0":{"tf":1.0}},"df":1}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0}},"df":5}}}}}}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.7320508075688772},"7":{"tf":1.0}},"df":2,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"1":{"tf":1.0}},"df":1}}}},":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{"21":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"14":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"23":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"3":{"tf":1.0}},"df":1}}},"o":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.7320508075688772}},"df":4}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.0},"23":{"tf":1.0}},"df":2},"i":{"docs":{},"df":0,"c":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"13":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0}},"df":4}}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"20":{"tf":1.0}},"df":2,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}},"k":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"n":{"docs":{"23":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"s":{"docs":{"24":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"8":{"tf":1.0}},"df":2}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"s":{"docs":{"10":{"tf":2.23606797749979},"11":{"tf":1.4142135623730951},"13":{"tf":2.23606797749979},"14":{"tf":2.449489742783178},"16":{"tf":2.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"21":{"tf":1.7320508075688772},"22":{"tf":2.449489742783178},"23":{"tf":1.0},"24":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.7320508075688772},"7":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":17}},"v":{"docs":{"10":{"tf":1.4142135623730951},"6":{"tf":2.23606797749979}},"df":2,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.4142135623730951},"18":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"3":{"tf":1.0}},"df":5}},"u":{"docs":{"19":{"tf":1.0},"3":{"tf":1.0},"9":{"tf":1.0}},"df":3}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":2.0},"1":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"22":{"tf":1.4142135623730951},"26":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":11}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"1":{"docs":{"24":{"tf":1.0}},"df":1},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0}},"df":3}}}}}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"8":{"docs":{"16":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}}}}}}}}}}}},"w":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"<":{"docs":{},"df":0,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{"3":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0}},"df":10,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.0}},"df":1}}},"3":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"3":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}}}}}}}}}},"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"10":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"3":{"tf":1.0}},"df":4},"3":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}},"8":{"docs":{"16":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0}},"df":3}}}}}}}}}}}}},"r":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"25":{"tf":1.0}},"df":2}}}},"i":{"docs":{"0":{"tf":1.0}},"df":1,"f":{"docs":{"1":{"tf":1.0}},"df":1,"i":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.0}},"df":3}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"r":{"docs":{"23":{"tf":1.4142135623730951},"24":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{"19":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}},"w":{"docs":{"11":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"n":{"docs":{"26":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0},"2":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"25":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0},"16":{"tf":1.0},"7":{"tf":1.0}},"df":3}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0},"7":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"1":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951}},"df":2,"s":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"1":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"1":{"tf":1.7320508075688772}},"df":1}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"3":{"tf":1.0}},"df":1,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"24":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"21":{"tf":1.0},"24":{"tf":1.0}},"df":4}}}}},"x":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":2.0},"11":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":12,"*":{"docs":{},"df":0,"|":{"docs":{},"df":0,"|":{"docs":{},"df":0,"^":{"docs":{},"df":0,"2":{"docs":{"11":{"tf":1.4142135623730951},"15":{"tf":1.0},"22":{"tf":1.0}},"df":3}}}}},"0":{"docs":{"16":{"tf":1.0},"22":{"tf":1.0}},"df":2},"_":{"docs":{},"df":0,"k":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0}},"df":3},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}},"{":{"docs":{},"df":0,"k":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0}},"df":3}}}}},"i":{"docs":{},"df":0,"^":{"docs":{},"df":0,"2":{"docs":{"11":{"tf":1.4142135623730951}},"df":1}},"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"k":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}},"|":{"docs":{},"df":0,"|":{"docs":{},"df":0,"^":{"docs":{},"df":0,"2":{"docs":{"5":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":2}}}}},"y":{"docs":{"10":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":3,".":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"u":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}},"[":{"docs":{},"df":0,"0":{"docs":{"6":{"tf":1.0}},"df":1}}},"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.4142135623730951},"22":{"tf":1.0},"6":{"tf":1.7320508075688772}},"df":6}}}}}},"breadcrumbs":{"root":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.4142135623730951},"22":{"tf":1.0}},"df":2}}}}}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.4142135623730951},"22":{"tf":1.4142135623730951}},"df":2}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0}},"df":4}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":4}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"7":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}}}},"s":{"docs":{},"df":0,"v":{"docs":{"26":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0}},"df":5}}}},"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0}},"df":4}}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":4}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"t":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}}},"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"25":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0}},"df":5}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"16":{"tf":1.0}},"df":1}}},"y":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":4}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0}},"df":4}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"w":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"21":{"tf":1.4142135623730951},"22":{"tf":1.0}},"df":2}}}}}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":4}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"9":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0}},"df":3}}}}},"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"14":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}},"u":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951},"25":{"tf":1.0},"26":{"tf":1.0}},"df":5}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":3}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0}},"df":4}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"15":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"14":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":3}}}}}},"z":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"title":{"root":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0},"22":{"tf":1.0}},"df":2}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"11":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"7":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}}}},"s":{"docs":{},"df":0,"v":{"docs":{"26":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}},"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0}},"df":1}}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"8":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"t":{"docs":{"1":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"25":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"16":{"tf":1.0}},"df":1}}},"y":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0}},"df":4}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"w":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"9":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"14":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}},"u":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}},"df":3}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"2":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"15":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"14":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}}},"z":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"documentStore":{"save":true,"docs":{"0":{"body":"fpci is a library and command-line simulator for iterative optimization\\nmethods whose iterates are compressed before every exchange. The setting\\ncomes from federated learning: a large model lives on a server, gets\\ncompressed, and is shipped to devices that continue training on local data.\\nCompression is lossy and random, so it injects noise into the iteration\\nitself — not into the gradients, as in the better-known gradient-compression\\nliterature, but into the very point the method stands on. The library treats this in the general language of fixed-point\\niterations. A method is a map T on R^d; running it means iterating x_{k+1} = T(x_k, s_k) with per-step randomness s_k; solving the problem\\nmeans finding the fixed point x* with T(x*) = x*. Gradient descent,\\nstochastic gradient descent, proximal methods, three-operator splitting, and\\nsimultaneous descent-ascent on saddle problems are all instances, and all of\\nthem ship with this crate. Two iteration modes are built in: Plain compressed iteration — every node applies its map and sends the\\ncompressed result; the master averages what it receives. Cheap, but the\\ncompression variance never dies out: the method converges linearly only to\\na ball around the fixed point, whose squared radius the library computes\\nin closed form. Variance-reduced compressed iteration — every node learns a shift\\nvector h_i and compresses only the difference between its map output\\nand the shift. At the fixed point the difference vanishes, compressing zero\\nis free, and linear convergence to the exact fixed point is restored, with\\nany compression variance. What makes the crate more than an algorithm dump is the theory\\ncalculator: every map carries a contraction certificate — constants (rho, B, c^2, sigma^2) describing how fast it contracts and how noisy it\\nis — and every compressor carries its variance parameter omega. From these\\nthe library evaluates the convergence bounds in closed form: rates, plateau\\nradii, admissible stepsizes. Every experiment the runner writes out is\\ncompared against the bound it is supposed to obey, and the statistical\\nchecker ( fpci verify) tests the underlying assumptions themselves by Monte\\nCarlo. Everything is deterministic: a run is a pure function of its configuration\\nand a root seed, down to the bytes of the CSV files (wall-clock timestamps\\naside). The chapters of this guide are compiled and executed as doctests of\\nthe crate, so every snippet you read here is code that ran.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"Build the workspace and run the test suite (unit tests, property tests,\\ndoctests, and the acceptance suite): cargo build --workspace --release\\ncargo test --workspace The CLI binary is fpci: cargo run --release -p fpci-cli -- run configs/vr_gdci_natural.toml A run writes, under the configured output directory: seed_<seed>.csv — one trajectory per root seed, transcript.csv — the per-message communication log of one run, summary.json — certificate constants, resolved stepsizes, the theory\\nbound, the measured plateau, and the comparison verdicts. Three subcommands cover the workflow: command effect fpci run <config> run every seed, write CSVs + summary fpci verify <config> Monte-Carlo checks of the modeling assumptions only fpci theory <config> print certificate, stepsizes, and bound without running Exit codes: 0 success, 1 a verification check failed, 2 configuration\\nerror, 3 every seed diverged. The output directory can be overridden with --output-dir or the FPCI_OUTPUT_DIR environment variable. The classic three-run comparison — gradient descent uncompressed, the same\\nwith compressed iterates, the same variance-reduced — ships as three config\\nfiles: fpci run configs/gd_identity.toml\\nfpci run configs/gdci_natural.toml\\nfpci run configs/vr_gdci_natural.toml Plotting r_sq against k (or against bits_cum) from the three CSV sets\\nshows the expected picture: geometric decay to numerical zero, a plateau at\\nthe compression-noise radius, and a variance-reduced curve that crosses below\\nthat plateau and keeps going. Any plotting tool works on the CSVs; the\\nrepository deliberately ships none.","breadcrumbs":"Getting Started » Getting Started","id":"1","title":"Getting Started"},"10":{"body":"apply_map(map, i, x, stream) performs one application of node i’s map\\nwith fresh randomness from the stream. Deterministic maps ignore the stream. #![allow(unused)] fn main() {\\nuse fpci::numerics::{RngStream, Vector};\\nuse fpci::operators::{apply_map, MapKind, MapSpec, ProblemSpec, QuadraticNode, SmoothProblem};\\nuse nalgebra::{DMatrix, DVector}; // f(x) = x\' diag(1,2) x / 2 - (1,2)\' x, minimized at (1, 1).\\nlet problem = ProblemSpec::Smooth(SmoothProblem::Quadratic { nodes: vec![QuadraticNode { a: DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 2.0])), b: DVector::from_vec(vec![1.0, 2.0]), }], reg: 0.0,\\n});\\nlet map = MapSpec::new(MapKind::Gd { gamma: 0.5 }, problem)?;\\nlet step = apply_map(&map, 0, &Vector::zeros(2), &mut RngStream::from_root(0))?;\\nassert_eq!(step.as_slice(), [0.5, 1.0]); Ok::<(), fpci::Error>(()) } The proximal maps have exact closed forms — soft-thresholding for l1,\\nscaling for l2: #![allow(unused)] fn main() {\\nuse fpci::numerics::Vector;\\nuse fpci::operators::{prox, Nonsmooth}; let v = Vector::new(vec![2.0, -0.5])?;\\nlet y = prox(&Nonsmooth::L1 { weight: 1.0 }, 1.0, &v);\\nassert_eq!(y.as_slice(), [1.0, 0.0]); Ok::<(), fpci::Error>(()) }","breadcrumbs":"Fixed-Point Maps and Certificates » Applying a map","id":"10","title":"Applying a map"},"11":{"body":"The convergence theory consumes four constants per map, packaged as a ContractionCertificate: rho — one-step contraction toward the fixed point: E||T(x, s) - x*||^2 <= (1 - rho) ||x - x*||^2 + B; B — the stochastic floor (zero for deterministic maps, a Monte-Carlo\\nestimate at x* for stochastic gradients, flagged as such); c^2 — the mean squared expected-Lipschitz constant over nodes; sigma^2 — mean_i E||T_i(x*, s)||^2, which drives the compression-noise\\nplateau of the plain iteration. #![allow(unused)] fn main() {\\nuse fpci::numerics::RngStream;\\nuse fpci::operators::{certificate_of, generate_synthetic, MapKind, MapSpec, Provenance}; let mut stream = RngStream::from_root(3);\\nlet problem = generate_synthetic(40, 8, 2.0, 1, 0.1, &mut stream)?;\\nlet l = problem.smooth().unwrap().constants().l_max;\\nlet map = MapSpec::new(MapKind::Gd { gamma: 1.0 / l }, problem)?; let cert = certificate_of(&map, 1, 64, &mut stream)?;\\n// gamma = 1/L on a condition-2 problem: rho = mu/L = 1/2, and the\\n// full-gradient step is deterministic and nonexpansive.\\nassert!((cert.rho - 0.5).abs() < 1e-9);\\nassert_eq!(cert.b, 0.0);\\nassert_eq!(cert.c_sq, 1.0);\\nassert_eq!(cert.sigma_sq_provenance, Provenance::Exact); Ok::<(), fpci::Error>(()) } Each family’s constants follow its standard analysis: rho = gamma * mu for\\ngradient maps; rho = 2 gamma mu - gamma^2 L^2 for descent-ascent (the\\nvalidator rejects stepsizes that make this nonpositive); for the\\nthree-operator step with first prox G and linear second prox H ( none\\nor l2(w)), the certified squared contraction factor is xi^2 = (1 - beta)^2 + beta^2 (1 - gamma mu)^2, beta = 1 / (1 + gamma w) and rho = 1 - xi^2. The validator enforces the structural condition this\\nderivation needs: the second prox term must be smooth, so l1 is accepted\\nonly as the first prox. Certificates are not decorative. The test suite (and fpci verify) checks\\nthem: deterministic maps must satisfy their contraction exactly at random\\npoints, stochastic ones within Monte-Carlo error.","breadcrumbs":"Fixed-Point Maps and Certificates » Contraction certificates","id":"11","title":"Contraction certificates"},"12":{"body":"One parameterized loop drives both iteration modes, for any node count;\\nsingle-node runs are just n = 1.","breadcrumbs":"The Iteration Engine » The Iteration Engine","id":"12","title":"The Iteration Engine"},"13":{"body":"Per round k, the master broadcasts x_k; each node i applies its map and\\nsends the compressed result; the master averages: delta_i = C(T_i(x_k, s_ik); xi_ik) x_{k+1} = mean_i delta_i With the identity compressor this is the uncompressed fixed-point\\niteration, bit for bit: #![allow(unused)] fn main() {\\nuse fpci::algorithms::{roles, step_plain, IterateState};\\nuse fpci::compressors::CompressorSpec;\\nuse fpci::numerics::{RngStream, Vector};\\nuse fpci::operators::{apply_map, MapKind, MapSpec, ProblemSpec, QuadraticNode, SmoothProblem};\\nuse nalgebra::{DMatrix, DVector}; let problem = ProblemSpec::Smooth(SmoothProblem::Quadratic { nodes: vec![QuadraticNode { a: DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 2.0])), b: DVector::from_vec(vec![1.0, 2.0]), }], reg: 0.0,\\n});\\nlet map = MapSpec::new(MapKind::Gd { gamma: 0.5 }, problem)?;\\nlet root = RngStream::from_root(11); let state = IterateState { x: Vector::zeros(2), k: 0 };\\nlet (next, _messages) = step_plain(&state, &map, &CompressorSpec::Identity, 1, &root)?; let mut map_stream = root.derive(&[roles::MAP_NOISE, 0, 0]);\\nlet oracle = apply_map(&map, 0, &Vector::zeros(2), &mut map_stream)?;\\nassert_eq!(next.x.as_slice(), oracle.as_slice()); Ok::<(), fpci::Error>(()) }","breadcrumbs":"The Iteration Engine » Plain mode","id":"13","title":"Plain mode"},"14":{"body":"Each node also keeps a shift h_i, compresses the difference against it, and\\nmoves the shift a fraction alpha toward what it just sent. The master\\nrelaxes by eta: delta_i = C(T_i(x_k, s_ik) - h_ik; xi_ik)\\nh_{i,k+1} = h_ik + alpha * delta_i\\nx_{k+1} = (1 - eta) x_k + eta * mean_i (delta_i + h_ik) Only the compressed delta_i crosses the wire: the master mirrors every h_i (it knows alpha and receives every delta_i), so the dense delta_i + h_ik is reconstructed on the master side. At the fixed point the shifts converge to T_i(x*, s), the differences\\nvanish, and compressing (near-)zero injects (near-)zero noise — that is the\\nwhole trick. With alpha = eta = 1 and lossless compression the update\\ntelescopes back to the plain step: #![allow(unused)] fn main() {\\nuse fpci::algorithms::{step_vr, IterateState, WorkerState};\\nuse fpci::compressors::CompressorSpec;\\nuse fpci::numerics::{RngStream, Vector};\\nuse fpci::operators::{MapKind, MapSpec, ProblemSpec, QuadraticNode, SmoothProblem};\\nuse fpci::theory::VrParams;\\nuse nalgebra::{DMatrix, DVector}; let problem = ProblemSpec::Smooth(SmoothProblem::Quadratic { nodes: vec![QuadraticNode { a: DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 2.0])), b: DVector::from_vec(vec![1.0, 2.0]), }], reg: 0.0,\\n});\\nlet map = MapSpec::new(MapKind::Gd { gamma: 0.5 }, problem)?;\\nlet params = VrParams { alpha: 1.0, eta: 1.0 };\\nlet state = IterateState { x: Vector::zeros(2), k: 0 };\\nlet workers = vec![WorkerState::new(Vector::zeros(2))];\\nlet (next, new_workers, _) = step_vr( &state, &workers, params, &map, &CompressorSpec::Identity, 1, &RngStream::from_root(0),\\n)?;\\n// delta = T(x) - h, h\' = T(x), x\' = h + delta = T(x).\\nassert_eq!(next.x.as_slice(), [0.5, 1.0]);\\nassert_eq!(new_workers[0].h.as_slice(), [0.5, 1.0]); Ok::<(), fpci::Error>(()) }","breadcrumbs":"The Iteration Engine » Variance-reduced mode","id":"14","title":"Variance-reduced mode"},"15":{"body":"Progress of the variance-reduced iteration is measured by Psi_k = ||x_k - x*||^2 + (4 eta^2 omega / (alpha n^2)) * sum_i E||h_ik - T_i(x*, s)||^2 which couples the iterate error with the shift errors. The engine evaluates\\nit at every round: exactly for deterministic maps, by Monte Carlo (with a\\nreported standard error) for stochastic ones. At omega = 0 it reduces to\\nthe squared distance.","breadcrumbs":"The Iteration Engine » The Lyapunov value","id":"15","title":"The Lyapunov value"},"16":{"body":"run_loop packages all of this: it wires the rounds through the simulated\\nnetwork, records one MetricsRow per round (plus row k = 0 for the initial\\nstate), and aborts with a structured divergence marker if an iterate goes\\nnon-finite or r_k exceeds 1e12 * r_0 — which genuinely happens when the\\ncompression variance crosses the plain-mode frontier. #![allow(unused)] fn main() {\\nuse fpci::algorithms::{run_loop, Mode, RunPlan};\\nuse fpci::compressors::CompressorSpec;\\nuse fpci::numerics::{RngStream, Vector};\\nuse fpci::operators::{generate_synthetic, MapKind, MapSpec}; let mut stream = RngStream::from_root(5);\\nlet problem = generate_synthetic(40, 8, 2.0, 1, 0.1, &mut stream)?;\\nlet l = problem.smooth().unwrap().constants().l_max;\\nlet map = MapSpec::new(MapKind::Gd { gamma: 1.0 / l }, problem)?;\\nlet comp = CompressorSpec::Natural; let plan = RunPlan { map: &map, comp: &comp, mode: Mode::Plain, n: 1, iterations: 50, root_seed: 1, mc_budget: 8, x0: Vector::zeros(8), h0: vec![Vector::zeros(8)],\\n};\\nlet out = run_loop(&plan)?;\\nassert_eq!(out.rows.len(), 51);\\nassert!(out.divergence.is_none());\\n// Compression noise keeps the plain iteration away from the fixed point.\\nassert!(out.rows.last().unwrap().r_sq > 0.0);\\n// The same plan replays to the same trajectory.\\nlet again = run_loop(&plan)?;\\nassert_eq!(out.rows.last().unwrap().r_sq, again.rows.last().unwrap().r_sq); Ok::<(), fpci::Error>(()) }","breadcrumbs":"The Iteration Engine » Running a full loop","id":"16","title":"Running a full loop"},"17":{"body":"Every statement the library makes about convergence is a closed-form\\nfunction of a contraction certificate (rho, B, c^2, sigma^2), a compressor\\nvariance omega, and a node count n. The theory module evaluates them;\\nnothing in it runs an iteration.","breadcrumbs":"The Theory Calculator » The Theory Calculator","id":"17","title":"The Theory Calculator"},"18":{"body":"The plain compressed iteration contracts the expected squared distance at\\nrate 1 - rho + 2 omega c^2 / n per round, down to a ball of squared radius (B + 2 omega sigma^2 / n) / (rho - 2 omega c^2 / n) — provided rho > 2 omega c^2 / n. Past that frontier nothing is\\nguaranteed, and the report says so instead of erroring: running divergent\\nconfigurations on purpose is part of the point. #![allow(unused)] fn main() {\\nuse fpci::operators::{ContractionCertificate, Provenance};\\nuse fpci::theory::plain_bound; let cert = ContractionCertificate { rho: 0.5, b: 0.0, c_sq: 1.0, sigma_sq: 2.0, b_provenance: Provenance::Exact, sigma_sq_provenance: Provenance::Exact,\\n}; // Natural compression (omega = 1/8) on a condition-2 problem, one node.\\nlet report = plain_bound(&cert, 0.125, 1);\\nassert!(report.valid);\\nassert_eq!(report.rate_factor, 0.75);\\nassert_eq!(report.plateau_radius_sq, Some(2.0)); // 2 * (1/8) * 2 / (1/4) // Crank omega past the frontier rho / (2 c^2) and validity is data, not panic.\\nlet broken = plain_bound(&cert, 1.0, 1);\\nassert!(!broken.valid);\\nassert!(broken.plateau_radius_sq.is_none()); } Note the structure of the radius: B is the map’s own stochastic floor, and 2 omega sigma^2 / n is the compression noise — proportional to the variance\\nparameter, shrinking linearly in the node count, and gone only if sigma^2 = 0, which essentially requires the fixed point to be the origin.","breadcrumbs":"The Theory Calculator » Plain mode: linear to a ball","id":"18","title":"Plain mode: linear to a ball"},"19":{"body":"With admissible stepsizes — alpha <= 1/(1 + omega) and eta <= min(1, rho n / (12 omega c^2)) — the Lyapunov value contracts at\\nrate 1 - min(alpha, eta * rho) / 2 down to 2 eta B / min(alpha, eta * rho).\\nNo omega in the rate, no plateau when B = 0: arbitrarily aggressive\\ncompression still converges linearly, just more slowly through eta. #![allow(unused)] fn main() {\\nuse fpci::operators::{ContractionCertificate, Provenance};\\nuse fpci::theory::{vr_bound, vr_stepsizes}; let cert = ContractionCertificate { rho: 0.5, b: 0.0, c_sq: 1.0, sigma_sq: 2.0, b_provenance: Provenance::Exact, sigma_sq_provenance: Provenance::Exact,\\n}; let params = vr_stepsizes(&cert, 0.125, 1);\\nassert!((params.alpha - 8.0 / 9.0).abs() < 1e-15); // 1 / (1 + omega)\\nassert!((params.eta - 1.0 / 3.0).abs() < 1e-15); // rho / (12 omega c^2) let report = vr_bound(&cert, params, 0.125, 1);\\nassert!((report.rate_factor - 11.0 / 12.0).abs() < 1e-15);\\nassert_eq!(report.plateau_radius_sq, Some(0.0)); } At omega = 0 the stepsize formula is singular; the library takes the limit\\ndirection eta = 1 (and alpha = 1), which reproduces the uncompressed\\niteration.","breadcrumbs":"The Theory Calculator » Variance-reduced mode: linear, period","id":"19","title":"Variance-reduced mode: linear, period"},"2":{"body":"Two low-level types carry the whole simulation: dense f64 vectors and\\nsplittable random streams.","breadcrumbs":"Vectors and Random Streams » Vectors and Random Streams","id":"2","title":"Vectors and Random Streams"},"20":{"body":"Both bounds are instances of one lemma: any sequence with r_{k+1} <= A r_k + B0 for A in (0,1) satisfies r_k <= A^k r_0 + B0 / (1 - A). That closed form is exposed directly — the\\nacceptance tests use it to build per-iteration envelopes that measured\\ntrajectories must stay under. #![allow(unused)] fn main() {\\nuse fpci::theory::geometric_bound; assert_eq!(geometric_bound(0.75, 0.5, 4.0, 2)?, 0.5625 * 4.0 + 2.0);\\nassert_eq!(geometric_bound(0.5, 0.25, 3.0, 0)?, 3.5); // k = 0: r0 + B/(1-A)\\nassert!(geometric_bound(1.0, 0.0, 1.0, 1).is_err()); // A must sit in (0,1) Ok::<(), fpci::Error>(()) }","breadcrumbs":"The Theory Calculator » The geometric backbone","id":"20","title":"The geometric backbone"},"21":{"body":"The simulated network is a star: one master, n workers, synchronous\\nrounds, no losses, no stragglers. What it adds over a plain loop is an\\ninspectable transcript — one record per message with its modeled bit\\ncost — separating what was communicated from what was computed. Per round the master broadcasts the iterate uncompressed ( 64 d bits to\\neach node; the algorithms compress only worker-to-master payloads, and the\\nmodel charges exactly what the algorithms compress) and gathers n\\ncompressed messages at the compressor’s modeled cost. #![allow(unused)] fn main() {\\nuse fpci::compressors::CompressorSpec;\\nuse fpci::numerics::Vector;\\nuse fpci::simnet::{broadcast, gather, Transcript}; let mut t = Transcript::new();\\nlet x = Vector::zeros(8); let copies = broadcast(&x, 2, 1, &mut t);\\nassert_eq!(copies.len(), 2); let comp = CompressorSpec::RandK { k: 3 };\\nlet delivered = gather(vec![Vector::zeros(8); 2], &comp, 1, &mut t)?;\\nassert_eq!(delivered.len(), 2); // 2 broadcasts of 64 * 8 bits + 2 gathers of 201 bits.\\nassert_eq!(t.total_bits(), 2 * 512 + 2 * 201);\\nt.check_well_formed(2)?; // Every node must report: partial participation is a hard error.\\nlet mut t2 = Transcript::new();\\nbroadcast(&x, 3, 1, &mut t2);\\nassert!(gather(vec![Vector::zeros(8)], &comp, 1, &mut t2).is_err()); Ok::<(), fpci::Error>(()) } The transcript renders to CSV ( round,direction,node,bits), and run_experiment writes one per output directory.","breadcrumbs":"Network and Bit Accounting » Network and Bit Accounting","id":"21","title":"Network and Bit Accounting"},"22":{"body":"The readout that motivates all of this: how much communication does it take\\nto push r = ||x - x*||^2 below a target? bits_to_target scans a\\ntrajectory for the first round at that level and returns the cumulative bits\\nspent, or None for a plateaued run that never gets there — which is\\nprecisely how the plain and variance-reduced modes separate when compression\\nis aggressive. #![allow(unused)] fn main() {\\nuse fpci::algorithms::{run_loop, Mode, RunPlan};\\nuse fpci::compressors::CompressorSpec;\\nuse fpci::numerics::{RngStream, Vector};\\nuse fpci::operators::{generate_synthetic, MapKind, MapSpec};\\nuse fpci::simnet::bits_to_target;\\nuse fpci::theory::VrParams; let mut stream = RngStream::from_root(5);\\nlet problem = generate_synthetic(40, 8, 2.0, 1, 0.1, &mut stream)?;\\nlet l = problem.smooth().unwrap().constants().l_max;\\nlet map = MapSpec::new(MapKind::Gd { gamma: 1.0 / l }, problem)?;\\nlet comp = CompressorSpec::Natural;\\nlet plan = RunPlan { map: &map, comp: &comp, mode: Mode::Vr(VrParams { alpha: 8.0 / 9.0, eta: 1.0 / 3.0 }), n: 1, iterations: 400, root_seed: 1, mc_budget: 8, x0: Vector::zeros(8), h0: vec![Vector::zeros(8)],\\n};\\nlet out = run_loop(&plan)?; // A target at the starting error costs nothing.\\nlet r0 = out.rows[0].r_sq;\\nassert_eq!(bits_to_target(&out.rows, &out.transcript, r0), Some(0)); // The variance-reduced run reaches deep targets in finite communication.\\nlet bits = bits_to_target(&out.rows, &out.transcript, 1e-10).unwrap();\\nassert!(bits > 0); // And no target below zero error is ever reached.\\nassert_eq!(bits_to_target(&out.rows, &out.transcript, -1.0), None); Ok::<(), fpci::Error>(()) } Uplink compression is visible directly in the cost model: for every\\ncompressor with omega > 0 the per-message cost sits strictly below the raw 64 d (for rand-k, as long as k < d models less than the full payload).","breadcrumbs":"Network and Bit Accounting » Bits to target","id":"22","title":"Bits to target"},"23":{"body":"The experiment layer turns a TOML configuration into runs, CSVs, and a\\nsummary that compares measurement against theory. The full key reference\\nlives in configs/example_full.toml; the shape is: mode = \\"vr\\" # \\"plain\\" | \\"vr\\"\\niterations = 400\\nnodes = 1\\nseeds = [1, 2, 3]\\nmc_budget = 2048\\noutput_dir = \\"out/demo\\" [problem]\\nkind = \\"synthetic\\" # \\"synthetic\\" | \\"libsvm\\" | \\"saddle\\"\\nrows = 100\\ncols = 20\\ncond = 2.0\\nreg = 0.1\\nseed = 777 [map]\\nkind = \\"gd\\" # \\"gd\\" | \\"sgd\\" | \\"prox_sgd\\" | \\"gda\\" | \\"davis_yin\\"\\ngamma = \\"auto\\" # \\"auto\\" or a number [compressor]\\nkind = \\"natural\\" # \\"identity\\" | \\"rand_k\\" | \\"natural\\" | \\"dithering\\" [stepsizes]\\nalpha = \\"auto\\"\\neta = \\"auto\\" \\"auto\\" fields resolve against the problem’s certificate: gamma = 1/L for\\ngradient maps, alpha = 1/(1 + omega), eta = min(1, rho n / (12 omega c^2)).\\nUnknown keys, type mismatches, and constraint violations are rejected at\\nparse time, naming the key and line: #![allow(unused)] fn main() {\\nuse fpci::config::parse_config; let bad = r#\\"\\nmode = \\"plain\\"\\niterations = 10\\nseeds = [1]\\noutput_dir = \\"out\\" [problem]\\nkind = \\"synthetic\\"\\nrows = 20\\ncols = 4\\ncond = 0.5\\nreg = 0.1 [map]\\nkind = \\"gd\\" [compressor]\\nkind = \\"natural\\"\\n\\"#;\\nlet err = parse_config(bad).unwrap_err();\\nassert!(err.to_string().contains(\\"condition number must be >= 1\\")); }","breadcrumbs":"Running Experiments » Running Experiments","id":"23","title":"Running Experiments"},"24":{"body":"The CLI is a thin wrapper over the library. resolve builds the problem,\\nvalidates the map, computes the certificate, and fixes the stepsizes; run_experiment then runs every seed and writes everything: #![allow(unused)] fn main() {\\nuse fpci::config::parse_config;\\nuse fpci::experiment::{run_experiment, parse_csv}; let text = r#\\"\\nmode = \\"vr\\"\\niterations = 60\\nseeds = [1, 2]\\nmc_budget = 64\\noutput_dir = \\"unused\\" [problem]\\nkind = \\"synthetic\\"\\nrows = 40\\ncols = 8\\ncond = 2.0\\nreg = 0.1\\nseed = 7 [map]\\nkind = \\"gd\\" [compressor]\\nkind = \\"natural\\" [stepsizes]\\nalpha = \\"auto\\"\\neta = \\"auto\\"\\n\\"#;\\nlet cfg = parse_config(text)?;\\nlet dir = std::env::temp_dir().join(\\"fpci-book-demo\\");\\nlet report = run_experiment(&cfg, &dir)?; assert!(report.summary.verdicts.theory_valid);\\nassert_eq!(report.summary.seeds_finished, vec![1, 2]); // Trajectories parse back from their CSVs, floats bit-exact.\\nlet rows = parse_csv(&std::fs::read_to_string(&report.csv_paths[0])?)?;\\nassert_eq!(rows.len(), 61);\\nassert_eq!(rows[0].k, 0); std::fs::remove_dir_all(&dir).ok(); Ok::<(), Box<dyn std::error::Error>>(()) }","breadcrumbs":"Running Experiments » Programmatic runs","id":"24","title":"Programmatic runs"},"25":{"body":"summary.json is recomputable from the CSVs plus config and certificate; it\\ncarries no information of its own. Fields: certificate — (rho, B, c^2, sigma^2) with provenance flags\\n( exact or monte_carlo) on the estimated entries; gamma, alpha, eta, omega — every resolved constant; bound — rate factor, plateau radius, validity, and a hypothesis note\\n(e.g. which stepsize limits the rate, or why the bound does not apply); plateau — mean of r_sq over the trailing window (default 20%), per\\nseed and across seeds with a standard error; verdicts — theory_valid, plateau_within_radius, and a one-line note; divergences — any seed that aborted, with the iteration and the error\\nlevel at abort; remaining seeds still run and report.","breadcrumbs":"Running Experiments » What the summary holds","id":"25","title":"What the summary holds"},"26":{"body":"seed,k,r_sq,psi,bits_cum,wall_ns\\n1,0,4.7154...e0,5.0101...e0,0,1375\\n1,1,3.0017...e0,3.4393...e0,1592,236000 Row k is the state after k communication rounds; psi is filled in\\nvariance-reduced runs and empty otherwise; floats carry 17 significant\\ndigits so parsing returns identical bits; wall_ns is the only\\nnondeterministic column — byte-level reproducibility of everything else\\nacross re-runs is an acceptance criterion of the repository.","breadcrumbs":"Running Experiments » The trajectory CSV","id":"26","title":"The trajectory CSV"},"3":{"body":"Vector wraps a Vec<f64> and enforces one\\ninvariant everywhere: entries are finite. Construction rejects NaN and\\ninfinities, and every library operation re-validates its output, so a\\ndiverging run fails loudly at the operation that produced the bad value. #![allow(unused)] fn main() {\\nuse fpci::numerics::{squared_distance, Vector}; let a = Vector::new(vec![3.0, 4.0])?;\\nlet b = Vector::zeros(2);\\nassert_eq!(squared_distance(&a, &b)?, 25.0); // Non-finite input is rejected outright.\\nassert!(Vector::new(vec![f64::NAN]).is_err()); // So are dimension mismatches.\\nassert!(squared_distance(&a, &Vector::zeros(3)).is_err()); Ok::<(), fpci::Error>(()) } Everything is 64-bit. The variance-reduced iteration drives squared\\ndistances down to the 1e-30 region before floating-point granularity says\\nstop, and the acceptance tests assert exactly that; 32-bit floats would\\nplateau twelve orders of magnitude too early.","breadcrumbs":"Vectors and Random Streams » Vectors","id":"3","title":"Vectors"},"4":{"body":"Simulating a network needs many independent randomness sources: each node\\ndraws its own map noise and its own compression noise, fresh at every\\niteration, and a run must be reproducible bit for bit from one integer seed. RngStream solves this with derivation by path: a\\nstream is identified by (root_seed, path) where the path is a list of\\ninteger labels, typically [role, node, iteration]. The cipher behind a\\nstream is keyed by a hash of that identity, so distinct paths give\\nstatistically independent streams, and the same identity always replays the\\nidentical sequence — regardless of how much the parent stream was consumed. #![allow(unused)] fn main() {\\nuse fpci::numerics::{sample_standard_gaussian, RngStream}; let root = RngStream::from_root(7); // Distinct paths, independent streams.\\nlet mut node0 = root.derive(&[0, 0]);\\nlet mut node1 = root.derive(&[0, 1]);\\nlet a = sample_standard_gaussian(&mut node0, 4);\\nlet b = sample_standard_gaussian(&mut node1, 4);\\nassert_ne!(a.as_slice(), b.as_slice()); // Same path, same draws, every time.\\nlet c = sample_standard_gaussian(&mut root.derive(&[0, 0]), 4);\\nassert_eq!(a.as_slice(), c.as_slice()); // Derivation order matters: [1] then [2] differs from [2] then [1].\\nlet mut x = root.derive(&[1]).derive(&[2]);\\nlet mut y = root.derive(&[2]).derive(&[1]);\\nuse rand::RngCore;\\nassert_ne!(x.next_u64(), y.next_u64()); } The engine reserves the first path label for the randomness role — map\\nnoise, compression noise, initialization, certificate estimation — with the\\nconstants in fpci::algorithms::roles. This realizes the independence the\\ndistributed theory assumes: node i’s draws at iteration k live on path [role, i, k] and never collide with anything else.","breadcrumbs":"Vectors and Random Streams » Splittable streams","id":"4","title":"Splittable streams"},"5":{"body":"A compression operator is a randomized map C with two properties: Unbiasedness — E[C(x)] = x: compressing adds noise, never drift. Bounded relative variance — E||C(x) - x||^2 <= omega * ||x||^2 for a\\nknown constant omega >= 0. omega is the single number the convergence theory consumes. omega = 0\\nmeans lossless; the larger it is, the cheaper the messages and the noisier\\nthe iteration.","breadcrumbs":"Compression Operators » Compression Operators","id":"5","title":"Compression Operators"},"6":{"body":"kind behavior omega bits per message identity passthrough 0 64 d rand_k keep k random coordinates, scaled by d/k d/k - 1 k (64 + ceil(log2 d)) natural round each coordinate to an adjacent power of two 1/8 9 d dithering norm-scaled rounding onto s levels min(d/s^2, sqrt(d)/s) 64 + d (1 + ceil(log2(s+1))) #![allow(unused)] fn main() {\\nuse fpci::compressors::CompressorSpec; let d = 8;\\nassert_eq!(CompressorSpec::Identity.omega(d), 0.0);\\nassert_eq!(CompressorSpec::RandK { k: 1 }.omega(2), 1.0);\\nassert_eq!(CompressorSpec::Natural.omega(d), 0.125);\\nassert_eq!(CompressorSpec::Dithering { levels: 4 }.omega(d), 0.5); assert_eq!(CompressorSpec::Identity.message_bits(10), 640);\\nassert_eq!(CompressorSpec::RandK { k: 3 }.message_bits(8), 201);\\nassert_eq!(CompressorSpec::Natural.message_bits(4), 36); } Natural rounding deserves a closer look: a coordinate v with 2^a <= |v| <= 2^{a+1} becomes sign(v) * 2^a with probability (2^{a+1} - |v|) / 2^a, else sign(v) * 2^{a+1}. The probabilities are\\nchosen so the mean is exactly v, and the worst-case relative variance —\\nattained at |v| = (4/3) * 2^a — is exactly 1/8. Powers of two and zero\\nare kept verbatim. #![allow(unused)] fn main() {\\nuse fpci::compressors::{apply_compressor, CompressorSpec};\\nuse fpci::numerics::{RngStream, Vector}; let x = Vector::new(vec![3.0, 2.0, 0.0])?;\\nlet mut stream = RngStream::from_root(1).derive(&[0]);\\nfor _ in 0..100 { let y = apply_compressor(&CompressorSpec::Natural, &x, &mut stream)?; assert!(y[0] == 2.0 || y[0] == 4.0); // 3.0 has two neighbors assert_eq!(y[1], 2.0); // lattice points are fixed assert_eq!(y[2], 0.0); // zero maps to zero\\n} Ok::<(), fpci::Error>(()) }","breadcrumbs":"Compression Operators » The zoo","id":"6","title":"The zoo"},"7":{"body":"For small cases the outcome space is finite and the contract can be checked exactly: rand-k over d <= 3 has at most 8 outcomes, natural rounding of a\\nscalar exactly 2. The test suite enumerates those. For everything else, estimate_moments runs the Monte-Carlo version and reports its own\\nstandard error: #![allow(unused)] fn main() {\\nuse fpci::compressors::{estimate_moments, CompressorSpec};\\nuse fpci::numerics::{RngStream, Vector}; let spec = CompressorSpec::RandK { k: 1 };\\nlet x = Vector::new(vec![3.0, 4.0])?;\\nlet mut stream = RngStream::from_root(5).derive(&[1]);\\nlet m = estimate_moments(&spec, &x, 50_000, &mut stream)?; // Enumerating both outcomes ([6,0] and [0,8], each with probability 1/2)\\n// gives E||C(x) - x||^2 = 25 exactly; the estimate agrees within noise.\\nassert!((m.mean_sq_deviation - 25.0).abs() <= 4.0 * m.std_error); Ok::<(), fpci::Error>(()) } The bit costs in the table are a model, not a wire format: the simulator\\ncharges them to its transcript so that runs can be compared on a\\ncommunication axis, but no actual bitstream encoder exists or is needed.","breadcrumbs":"Compression Operators » Checking the contract","id":"7","title":"Checking the contract"},"8":{"body":"A map is the algorithm being compressed. The library ships five families,\\neach defined on a problem it can certify: map update problem gd x - gamma * grad f_i(x) quadratic / ridge sgd minibatch gradient step ridge (row data) prox_sgd minibatch step, then prox_{gamma H} composite gda simultaneous descent-ascent saddle davis_yin three-operator splitting step quadratic / ridge + (G, H) split","breadcrumbs":"Fixed-Point Maps and Certificates » Fixed-Point Maps and Certificates","id":"8","title":"Fixed-Point Maps and Certificates"},"9":{"body":"Synthetic regression problems are generated with planted conditioning:\\nthe feature matrix gets geometrically spaced singular values chosen so the\\nregularized Hessian has exactly the requested condition number, which pins\\nthe contraction factor of gradient maps in advance. #![allow(unused)] fn main() {\\nuse fpci::numerics::RngStream;\\nuse fpci::operators::{generate_synthetic, solve_reference}; let mut stream = RngStream::from_root(7);\\n// 60 rows, 12 features, condition number 10, reg 0.1, split over 3 nodes.\\nlet problem = generate_synthetic(60, 12, 10.0, 3, 0.1, &mut stream)?;\\nlet c = problem.smooth().unwrap().constants();\\nlet kappa = c.l_max / c.mu; // max per-node smoothness over global strong convexity\\nassert!(kappa >= 9.9); // The reference solution is an exact linear solve.\\nlet x_star = solve_reference(&problem)?;\\nassert_eq!(x_star.dim(), 12); Ok::<(), fpci::Error>(()) }","breadcrumbs":"Fixed-Point Maps and Certificates » Problems","id":"9","title":"Problems"}},"docInfo":{"0":{"body":242,"breadcrumbs":2,"title":1},"1":{"body":175,"breadcrumbs":4,"title":2},"10":{"body":101,"breadcrumbs":6,"title":2},"11":{"body":206,"breadcrumbs":6,"title":2},"12":{"body":14,"breadcrumbs":4,"title":2},"13":{"body":98,"breadcrumbs":4,"title":2},"14":{"body":159,"breadcrumbs":5,"title":3},"15":{"body":40,"breadcrumbs":4,"title":2},"16":{"body":121,"breadcrumbs":5,"title":3},"17":{"body":25,"breadcrumbs":4,"title":2},"18":{"body":137,"breadcrumbs":6,"title":4},"19":{"body":115,"breadcrumbs":7,"title":5},"2":{"body":13,"breadcrumbs":6,"title":3},"20":{"body":60,"breadcrumbs":4,"title":2},"21":{"body":138,"breadcrumbs":6,"title":3},"22":{"body":167,"breadcrumbs":5,"title":2},"23":{"body":143,"breadcrumbs":4,"title":2},"24":{"body":94,"breadcrumbs":4,"title":2},"25":{"body":71,"breadcrumbs":4,"title":2},"26":{"body":37,"breadcrumbs":4,"title":2},"3":{"body":81,"breadcrumbs":4,"title":1},"4":{"body":154,"breadcrumbs":5,"title":2},"5":{"body":41,"breadcrumbs":4,"title":2},"6":{"body":158,"breadcrumbs":3,"title":1},"7":{"body":99,"breadcrumbs":4,"title":2},"8":{"body":50,"breadcrumbs":8,"title":4},"9":{"body":84,"breadcrumbs":5,"title":1}},"length":27},"lang":"English"}}'));