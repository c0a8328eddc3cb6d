// Generated by tools/gen_primitive_table.py. Do not edit by hand.
namespace covernum {
extern const char* kEmbeddedPrimitiveTable;
const char* kEmbeddedPrimitiveTable = R"COVERNUM_TABLE(
{
 "tables": [
  {
   "degree": 5,
   "entries": [
    {
     "generators": [
      "(1 2 3 4 5)",
      "(2 5)(3 4)"
     ],
     "label": "agl_1_5_even",
     "normalizer_order": "20",
     "order": "10"
    }
   ]
  },
  {
   "degree": 6,
   "entries": [
    {
     "generators": [
      "(1 3 5 4 6)",
      "(1 2)(3 6)"
     ],
     "label": "psl_2_5",
     "normalizer_order": "120",
     "order": "60"
    }
   ]
  },
  {
   "degree": 7,
   "entries": [
    {
     "generators": [
      "(2 6)(3 7)",
      "(1 2 4)(3 6 5)"
     ],
     "label": "psl_3_2",
     "normalizer_order": "168",
     "order": "168"
    },
    {
     "generators": [
      "(1 3)(5 7)",
      "(1 4 2)(3 5 6)"
     ],
     "label": "psl_3_2_hyperplanes",
     "normalizer_order": "168",
     "order": "168",
     "sn_class_of": "psl_3_2",
     "sn_conjugacy_witness": "(1 4)(3 6)"
    }
   ]
  },
  {
   "degree": 8,
   "entries": [
    {
     "generators": [
      "(3 7)(4 8)",
      "(2 3 5)(4 7 6)",
      "(1 5)(2 6)(3 7)(4 8)"
     ],
     "label": "agl_3_2",
     "normalizer_order": "1344",
     "order": "1344"
    }
   ]
  },
  {
   "degree": 9,
   "entries": [
    {
     "generators": [
      "(1 6)(3 8)(4 9)(5 7)",
      "(1 2)(3 9)(4 7)(5 8)",
      "(3 9 4 5 6 8 7)",
      "(3 5 4)(7 9 8)"
     ],
     "label": "pgammal_2_8",
     "normalizer_order": "1512",
     "order": "1512"
    },
    {
     "generators": [
      "(2 5 8)(3 9 6)",
      "(2 7 3 4)(5 8 9 6)",
      "(1 4 7)(2 5 8)(3 6 9)",
      "(1 2 3)(4 5 6)(7 8 9)"
     ],
     "label": "asl_2_3",
     "normalizer_order": "432",
     "order": "216"
    }
   ]
  },
  {
   "degree": 10,
   "entries": [
    {
     "generators": [
      "(1 5 8)(3 10 7)(4 9 6)",
      "(1 2)(5 8)(6 7)(9 10)",
      "(3 8 4 5)(6 9 10 7)",
      "(3 6 4 10)(5 9 8 7)"
     ],
     "label": "m10",
     "normalizer_order": "1440",
     "order": "720"
    }
   ]
  },
  {
   "degree": 11,
   "entries": [
    {
     "generators": [
      "(1 2 3 4 5 6 7 8 9 10 11)",
      "(3 7 11 8)(4 10 5 6)"
     ],
     "label": "m11",
     "normalizer_order": "7920",
     "order": "7920"
    }
   ]
  },
  {
   "degree": 12,
   "entries": [
    {
     "generators": [
      "(1 2 3 4 5 6 7 8 9 10 11)",
      "(3 7 11 8)(4 10 5 6)",
      "(1 12)(2 11)(3 6)(4 8)(5 9)(7 10)"
     ],
     "label": "m12",
     "normalizer_order": "95040",
     "order": "95040"
    }
   ]
  },
  {
   "degree": 13,
   "entries": [
    {
     "generators": [
      "(2 8 11)(3 9 13)(4 10 12)",
      "(1 2 5)(3 8 6)(4 11 7)(10 12 13)"
     ],
     "label": "psl_3_3",
     "normalizer_order": "5616",
     "order": "5616"
    },
    {
     "generators": [
      "(1 2 3 4 5 6 7 8 9 10 11 12 13)",
      "(2 5 4 13 10 11)(3 9 7 12 6 8)"
     ],
     "label": "f_13_6",
     "normalizer_order": "156",
     "order": "78"
    },
    {
     "generators": [
      "(1 3 4)(6 12 9)(7 10 13)",
      "(1 5 2)(3 6 8)(4 7 11)(9 10 12)"
     ],
     "label": "psl_3_3_hyperplanes",
     "normalizer_order": "5616",
     "order": "5616",
     "sn_class_of": "psl_3_3",
     "sn_conjugacy_witness": "(1 5)(3 11)(4 8)(6 7)(9 13 12 10)"
    }
   ]
  },
  {
   "degree": 14,
   "entries": [
    {
     "generators": [
      "(1 3 9 11 12 10 13 4 7 5 6 8 14)",
      "(1 2)(3 14)(4 8)(5 6)(9 13)(11 12)"
     ],
     "label": "psl_2_13",
     "normalizer_order": "2184",
     "order": "1092"
    }
   ]
  },
  {
   "degree": 15,
   "entries": [
    {
     "generators": [
      "(4 12)(5 13)(6 14)(7 15)",
      "(1 2 4 8)(3 6 12 9)(5 10)(7 14 13 11)"
     ],
     "label": "psl_4_2",
     "normalizer_order": "20160",
     "order": "20160"
    },
    {
     "generators": [
      "(1 3)(5 7)(9 11)(13 15)",
      "(1 8 4 2)(3 9 12 6)(5 10)(7 11 13 14)"
     ],
     "label": "psl_4_2_hyperplanes",
     "normalizer_order": "20160",
     "order": "20160",
     "sn_class_of": "psl_4_2",
     "sn_conjugacy_witness": "(1 8)(2 4)(3 12)(5 10)(7 14)(11 13)"
    }
   ]
  },
  {
   "degree": 16,
   "entries": [
    {
     "generators": [
      "(5 13)(6 14)(7 15)(8 16)",
      "(2 3 5 9)(4 7 13 10)(6 11)(8 15 14 12)",
      "(1 9)(2 10)(3 11)(4 12)(5 13)(6 14)(7 15)(8 16)"
     ],
     "label": "agl_4_2",
     "normalizer_order": "322560",
     "order": "322560"
    }
   ]
  },
  {
   "degree": 17,
   "entries": [
    {
     "generators": [
      "(1 10)(3 14)(4 7)(5 12)(6 17)(8 16)(9 11)(13 15)",
      "(1 2)(3 17)(4 13)(5 7)(6 11)(8 16)(9 14)(12 15)",
      "(3 11 16 5 4 13 7 8 6 17 12 14 10 9 15)",
      "(3 5 17 7)(4 14 12 6)(8 16)(9 15 11 13)"
     ],
     "label": "pgammal_2_16",
     "normalizer_order": "16320",
     "order": "16320"
    }
   ]
  },
  {
   "degree": 18,
   "entries": [
    {
     "generators": [
      "(1 3 11 8 15 9 5 7 17 4 14 16 12 6 13 10 18)",
      "(1 2)(3 18)(4 10)(5 13)(7 12)(8 16)(9 14)(11 17)"
     ],
     "label": "psl_2_17",
     "normalizer_order": "4896",
     "order": "2448"
    }
   ]
  },
  {
   "degree": 19,
   "entries": [
    {
     "generators": [
      "(1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19)",
      "(2 5 17 8 10 18 12 7 6)(3 9 14 15 19 16 4 13 11)"
     ],
     "label": "f_19_9",
     "normalizer_order": "342",
     "order": "171"
    }
   ]
  },
  {
   "degree": 20,
   "entries": [
    {
     "generators": [
      "(1 3 12 15 7 6 18 13 14 19 4 9 10 5 17 16 8 11 20)",
      "(1 2)(3 20)(4 11)(5 8)(6 16)(7 17)(9 10)(12 19)(13 14)(15 18)"
     ],
     "label": "psl_2_19",
     "normalizer_order": "6840",
     "order": "3420"
    }
   ]
  },
  {
   "degree": 21,
   "entries": [
    {
     "generators": [
      "(1 7 2)(3 8 12)(4 9 13)(5 10 14)(6 11 15)",
      "(1 7 12 16 19 21 6)(2 8 13 17 20 5 11)(3 9 14 18 4 10 15)"
     ],
     "label": "a7_on_pairs",
     "normalizer_order": "5040",
     "order": "2520"
    },
    {
     "generators": [
      "(2 14)(3 15)(4 16)(5 17)(10 18)(11 21)(12 19)(13 20)",
      "(1 2 6)(3 10 9)(4 14 8)(5 18 7)(11 17 20)(12 21 15)",
      "(3 5 4)(7 8 9)(10 18 14)(11 20 17)(12 21 15)(13 19 16)",
      "(7 8 9)(10 14 18)(11 16 21)(12 17 19)(13 15 20)"
     ],
     "label": "pgl_3_4",
     "normalizer_order": "120960",
     "order": "60480"
    },
    {
     "generators": [
      "(1 4)(3 5)(7 11)(8 16)(9 21)(12 20)(13 17)(15 19)",
      "(1 6 2)(3 9 10)(4 8 14)(5 7 18)(11 20 17)(12 15 21)",
      "(3 5 4)(7 8 9)(10 18 14)(11 20 17)(12 21 15)(13 19 16)",
      "(3 4 5)(7 8 9)(11 12 13)(15 16 17)(19 20 21)"
     ],
     "label": "pgl_3_4_hyperplanes",
     "normalizer_order": "120960",
     "order": "60480",
     "sn_class_of": "pgl_3_4",
     "sn_conjugacy_witness": "(1 6)(3 18)(4 14)(5 10)(7 9)(11 17)(13 19)(15 21)"
    }
   ]
  }
 ],
 "version": "covernum-ptable-1"
}
)COVERNUM_TABLE";
}  // namespace covernum
