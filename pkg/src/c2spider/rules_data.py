"""Frozen relation table for the C2 web engine.

Generated by tools/derive_rules.py from the representation
theory of quantum sp(4); audit with `c2spider web rules`.
"""

RULES_JSON = {
 "crossing": [
  {
   "den": [
    [
     0,
     1,
     1
    ]
   ],
   "num": [
    [
     1,
     1,
     1
    ]
   ]
  },
  {
   "den": [
    [
     0,
     1,
     1
    ],
    [
     2,
     1,
     1
    ]
   ],
   "num": [
    [
     -1,
     1,
     1
    ]
   ]
  },
  {
   "den": [
    [
     0,
     1,
     1
    ],
    [
     2,
     1,
     1
    ]
   ],
   "num": [
    [
     1,
     1,
     1
    ]
   ]
  }
 ],
 "faces": [
  {
   "rhs": [],
   "word": [
    "s"
   ]
  },
  {
   "rhs": [
    {
     "coeff": {
      "den": [
       [
        0,
        1,
        1
       ]
      ],
      "num": [
       [
        -2,
        -1,
        1
       ],
       [
        0,
        -2,
        1
       ],
       [
        2,
        -1,
        1
       ]
      ]
     },
     "edges": [
      [
       [
        "x",
        0
       ],
       [
        "x",
        1
       ],
       "d"
      ]
     ],
     "verts": []
    }
   ],
   "word": [
    "s",
    "s"
   ]
  },
  {
   "rhs": [
    {
     "coeff": {
      "den": [
       [
        0,
        1,
        1
       ]
      ],
      "num": [
       [
        -4,
        1,
        1
       ],
       [
        -2,
        1,
        1
       ],
       [
        0,
        1,
        1
       ],
       [
        2,
        1,
        1
       ],
       [
        4,
        1,
        1
       ]
      ]
     },
     "edges": [
      [
       [
        "x",
        0
       ],
       [
        "x",
        1
       ],
       "s"
      ]
     ],
     "verts": []
    }
   ],
   "word": [
    "s",
    "d"
   ]
  },
  {
   "rhs": [],
   "word": [
    "s",
    "s",
    "s"
   ]
  },
  {
   "rhs": [
    {
     "coeff": {
      "den": [
       [
        0,
        1,
        1
       ]
      ],
      "num": [
       [
        -2,
        -1,
        1
       ],
       [
        0,
        -1,
        1
       ],
       [
        2,
        -1,
        1
       ]
      ]
     },
     "edges": [
      [
       [
        "x",
        0
       ],
       [
        "v",
        0,
        0
       ],
       "s"
      ],
      [
       [
        "v",
        0,
        1
       ],
       [
        "x",
        2
       ],
       "s"
      ],
      [
       [
        "v",
        0,
        2
       ],
       [
        "x",
        1
       ],
       "d"
      ]
     ],
     "verts": [
      [
       "tri",
       [
        "s",
        "s",
        "d"
       ],
       []
      ]
     ]
    }
   ],
   "word": [
    "s",
    "s",
    "d"
   ]
  },
  {
   "rhs": [
    {
     "coeff": {
      "den": [
       [
        0,
        1,
        1
       ]
      ],
      "num": [
       [
        -4,
        -1,
        1
       ],
       [
        -2,
        -1,
        1
       ],
       [
        0,
        -1,
        1
       ],
       [
        2,
        -1,
        1
       ],
       [
        4,
        -1,
        1
       ]
      ]
     },
     "edges": [
      [
       [
        "x",
        0
       ],
       [
        "x",
        3
       ],
       "s"
      ],
      [
       [
        "x",
        1
       ],
       [
        "x",
        2
       ],
       "s"
      ]
     ],
     "verts": []
    },
    {
     "coeff": {
      "den": [
       [
        0,
        1,
        1
       ]
      ],
      "num": [
       [
        0,
        1,
        1
       ]
      ]
     },
     "edges": [
      [
       [
        "v",
        0,
        0
       ],
       [
        "v",
        1,
        1
       ],
       "d"
      ],
      [
       [
        "v",
        0,
        1
       ],
       [
        "x",
        1
       ],
       "s"
      ],
      [
       [
        "v",
        0,
        2
       ],
       [
        "x",
        0
       ],
       "s"
      ],
      [
       [
        "x",
        2
       ],
       [
        "v",
        1,
        0
       ],
       "s"
      ],
      [
       [
        "v",
        1,
        2
       ],
       [
        "x",
        3
       ],
       "s"
      ]
     ],
     "verts": [
      [
       "tri",
       [
        "d",
        "s",
        "s"
       ],
       []
      ],
      [
       "tri",
       [
        "s",
        "d",
        "s"
       ],
       []
      ]
     ]
    },
    {
     "coeff": {
      "den": [
       [
        0,
        1,
        1
       ]
      ],
      "num": [
       [
        -2,
        -1,
        1
       ],
       [
        0,
        -1,
        1
       ],
       [
        2,
        -1,
        1
       ]
      ]
     },
     "edges": [
      [
       [
        "x",
        0
       ],
       [
        "v",
        1,
        0
       ],
       "s"
      ],
      [
       [
        "x",
        1
       ],
       [
        "v",
        0,
        1
       ],
       "s"
      ],
      [
       [
        "x",
        2
       ],
       [
        "v",
        0,
        0
       ],
       "s"
      ],
      [
       [
        "x",
        3
       ],
       [
        "v",
        1,
        1
       ],
       "s"
      ],
      [
       [
        "v",
        0,
        2
       ],
       [
        "v",
        1,
        2
       ],
       "d"
      ]
     ],
     "verts": [
      [
       "tri",
       [
        "s",
        "s",
        "d"
       ],
       []
      ],
      [
       "tri",
       [
        "s",
        "s",
        "d"
       ],
       []
      ]
     ]
    }
   ],
   "word": [
    "s",
    "d",
    "s",
    "d"
   ]
  },
  {
   "rhs": [
    {
     "coeff": {
      "den": [
       [
        0,
        1,
        1
       ]
      ],
      "num": [
       [
        -2,
        1,
        1
       ],
       [
        0,
        2,
        1
       ],
       [
        2,
        1,
        1
       ]
      ]
     },
     "edges": [
      [
       [
        "x",
        0
       ],
       [
        "x",
        3
       ],
       "s"
      ],
      [
       [
        "x",
        1
       ],
       [
        "x",
        2
       ],
       "d"
      ]
     ],
     "verts": []
    },
    {
     "coeff": {
      "den": [
       [
        0,
        1,
        1
       ]
      ],
      "num": [
       [
        0,
        1,
        1
       ]
      ]
     },
     "edges": [
      [
       [
        "x",
        0
       ],
       [
        "v",
        0,
        0
       ],
       "s"
      ],
      [
       [
        "v",
        0,
        1
       ],
       [
        "v",
        1,
        0
       ],
       "s"
      ],
      [
       [
        "v",
        0,
        2
       ],
       [
        "x",
        1
       ],
       "d"
      ],
      [
       [
        "v",
        1,
        1
       ],
       [
        "x",
        3
       ],
       "s"
      ],
      [
       [
        "v",
        1,
        2
       ],
       [
        "x",
        2
       ],
       "d"
      ]
     ],
     "verts": [
      [
       "tri",
       [
        "s",
        "s",
        "d"
       ],
       []
      ],
      [
       "tri",
       [
        "s",
        "s",
        "d"
       ],
       []
      ]
     ]
    }
   ],
   "word": [
    "s",
    "s",
    "s",
    "d"
   ]
  },
  {
   "rhs": [
    {
     "coeff": {
      "den": [
       [
        0,
        1,
        1
       ]
      ],
      "num": [
       [
        -2,
        1,
        1
       ],
       [
        0,
        2,
        1
       ],
       [
        2,
        1,
        1
       ]
      ]
     },
     "edges": [
      [
       [
        "x",
        0
       ],
       [
        "x",
        4
       ],
       "s"
      ],
      [
       [
        "x",
        1
       ],
       [
        "v",
        0,
        2
       ],
       "d"
      ],
      [
       [
        "x",
        2
       ],
       [
        "v",
        0,
        1
       ],
       "s"
      ],
      [
       [
        "x",
        3
       ],
       [
        "v",
        0,
        0
       ],
       "s"
      ]
     ],
     "verts": [
      [
       "tri",
       [
        "s",
        "s",
        "d"
       ],
       []
      ]
     ]
    },
    {
     "coeff": {
      "den": [
       [
        0,
        1,
        1
       ]
      ],
      "num": [
       [
        -2,
        1,
        1
       ],
       [
        0,
        1,
        1
       ],
       [
        2,
        1,
        1
       ]
      ]
     },
     "edges": [
      [
       [
        "x",
        0
       ],
       [
        "v",
        0,
        0
       ],
       "s"
      ],
      [
       [
        "x",
        1
       ],
       [
        "v",
        0,
        2
       ],
       "d"
      ],
      [
       [
        "x",
        2
       ],
       [
        "x",
        3
       ],
       "s"
      ],
      [
       [
        "x",
        4
       ],
       [
        "v",
        0,
        1
       ],
       "s"
      ]
     ],
     "verts": [
      [
       "tri",
       [
        "s",
        "s",
        "d"
       ],
       []
      ]
     ]
    },
    {
     "coeff": {
      "den": [
       [
        0,
        1,
        1
       ]
      ],
      "num": [
       [
        0,
        1,
        1
       ]
      ]
     },
     "edges": [
      [
       [
        "v",
        0,
        0
       ],
       [
        "v",
        2,
        1
       ],
       "d"
      ],
      [
       [
        "v",
        0,
        1
       ],
       [
        "v",
        1,
        0
       ],
       "s"
      ],
      [
       [
        "v",
        0,
        2
       ],
       [
        "x",
        0
       ],
       "s"
      ],
      [
       [
        "v",
        1,
        1
       ],
       [
        "x",
        2
       ],
       "s"
      ],
      [
       [
        "v",
        1,
        2
       ],
       [
        "x",
        1
       ],
       "d"
      ],
      [
       [
        "x",
        3
       ],
       [
        "v",
        2,
        0
       ],
       "s"
      ],
      [
       [
        "v",
        2,
        2
       ],
       [
        "x",
        4
       ],
       "s"
      ]
     ],
     "verts": [
      [
       "tri",
       [
        "d",
        "s",
        "s"
       ],
       []
      ],
      [
       "tri",
       [
        "s",
        "s",
        "d"
       ],
       []
      ],
      [
       "tri",
       [
        "s",
        "d",
        "s"
       ],
       []
      ]
     ]
    },
    {
     "coeff": {
      "den": [
       [
        0,
        1,
        1
       ]
      ],
      "num": [
       [
        0,
        1,
        1
       ]
      ]
     },
     "edges": [
      [
       [
        "x",
        0
       ],
       [
        "v",
        1,
        0
       ],
       "s"
      ],
      [
       [
        "x",
        1
       ],
       [
        "v",
        1,
        2
       ],
       "d"
      ],
      [
       [
        "x",
        2
       ],
       [
        "v",
        0,
        1
       ],
       "s"
      ],
      [
       [
        "x",
        3
       ],
       [
        "v",
        0,
        0
       ],
       "s"
      ],
      [
       [
        "x",
        4
       ],
       [
        "v",
        2,
        1
       ],
       "s"
      ],
      [
       [
        "v",
        0,
        2
       ],
       [
        "v",
        2,
        2
       ],
       "d"
      ],
      [
       [
        "v",
        1,
        1
       ],
       [
        "v",
        2,
        0
       ],
       "s"
      ]
     ],
     "verts": [
      [
       "tri",
       [
        "s",
        "s",
        "d"
       ],
       []
      ],
      [
       "tri",
       [
        "s",
        "s",
        "d"
       ],
       []
      ],
      [
       "tri",
       [
        "s",
        "s",
        "d"
       ],
       []
      ]
     ]
    }
   ],
   "word": [
    "s",
    "s",
    "d",
    "s",
    "d"
   ]
  },
  {
   "rhs": [
    {
     "coeff": {
      "den": [
       [
        0,
        1,
        1
       ]
      ],
      "num": [
       [
        -4,
        1,
        1
       ],
       [
        -2,
        1,
        1
       ],
       [
        0,
        1,
        1
       ],
       [
        2,
        1,
        1
       ],
       [
        4,
        1,
        1
       ]
      ]
     },
     "edges": [
      [
       [
        "x",
        0
       ],
       [
        "x",
        5
       ],
       "s"
      ],
      [
       [
        "x",
        1
       ],
       [
        "x",
        2
       ],
       "s"
      ],
      [
       [
        "x",
        3
       ],
       [
        "x",
        4
       ],
       "s"
      ]
     ],
     "verts": []
    },
    {
     "coeff": {
      "den": [
       [
        0,
        1,
        1
       ]
      ],
      "num": [
       [
        -2,
        1,
        1
       ],
       [
        0,
        2,
        1
       ],
       [
        2,
        1,
        1
       ]
      ]
     },
     "edges": [
      [
       [
        "x",
        0
       ],
       [
        "x",
        5
       ],
       "s"
      ],
      [
       [
        "x",
        1
       ],
       [
        "v",
        0,
        1
       ],
       "s"
      ],
      [
       [
        "x",
        2
       ],
       [
        "v",
        0,
        0
       ],
       "s"
      ],
      [
       [
        "x",
        3
       ],
       [
        "v",
        1,
        1
       ],
       "s"
      ],
      [
       [
        "x",
        4
       ],
       [
        "v",
        1,
        0
       ],
       "s"
      ],
      [
       [
        "v",
        0,
        2
       ],
       [
        "v",
        1,
        2
       ],
       "d"
      ]
     ],
     "verts": [
      [
       "tri",
       [
        "s",
        "s",
        "d"
       ],
       []
      ],
      [
       "tri",
       [
        "s",
        "s",
        "d"
       ],
       []
      ]
     ]
    },
    {
     "coeff": {
      "den": [
       [
        0,
        1,
        1
       ]
      ],
      "num": [
       [
        -2,
        1,
        1
       ],
       [
        0,
        1,
        1
       ],
       [
        2,
        1,
        1
       ]
      ]
     },
     "edges": [
      [
       [
        "x",
        0
       ],
       [
        "v",
        1,
        0
       ],
       "s"
      ],
      [
       [
        "x",
        1
       ],
       [
        "v",
        0,
        1
       ],
       "s"
      ],
      [
       [
        "x",
        2
       ],
       [
        "v",
        0,
        0
       ],
       "s"
      ],
      [
       [
        "x",
        3
       ],
       [
        "x",
        4
       ],
       "s"
      ],
      [
       [
        "x",
        5
       ],
       [
        "v",
        1,
        1
       ],
       "s"
      ],
      [
       [
        "v",
        0,
        2
       ],
       [
        "v",
        1,
        2
       ],
       "d"
      ]
     ],
     "verts": [
      [
       "tri",
       [
        "s",
        "s",
        "d"
       ],
       []
      ],
      [
       "tri",
       [
        "s",
        "s",
        "d"
       ],
       []
      ]
     ]
    },
    {
     "coeff": {
      "den": [
       [
        0,
        1,
        1
       ]
      ],
      "num": [
       [
        0,
        -1,
        1
       ]
      ]
     },
     "edges": [
      [
       [
        "x",
        0
       ],
       [
        "v",
        0,
        2
       ],
       "s"
      ],
      [
       [
        "x",
        1
       ],
       [
        "x",
        2
       ],
       "s"
      ],
      [
       [
        "x",
        3
       ],
       [
        "v",
        0,
        1
       ],
       "s"
      ],
      [
       [
        "x",
        4
       ],
       [
        "v",
        1,
        0
       ],
       "s"
      ],
      [
       [
        "x",
        5
       ],
       [
        "v",
        1,
        2
       ],
       "s"
      ],
      [
       [
        "v",
        0,
        0
       ],
       [
        "v",
        1,
        1
       ],
       "d"
      ]
     ],
     "verts": [
      [
       "tri",
       [
        "d",
        "s",
        "s"
       ],
       []
      ],
      [
       "tri",
       [
        "s",
        "d",
        "s"
       ],
       []
      ]
     ]
    },
    {
     "coeff": {
      "den": [
       [
        0,
        1,
        1
       ]
      ],
      "num": [
       [
        -2,
        1,
        1
       ],
       [
        0,
        1,
        1
       ],
       [
        2,
        1,
        1
       ]
      ]
     },
     "edges": [
      [
       [
        "x",
        0
       ],
       [
        "v",
        1,
        0
       ],
       "s"
      ],
      [
       [
        "x",
        1
       ],
       [
        "x",
        2
       ],
       "s"
      ],
      [
       [
        "x",
        3
       ],
       [
        "v",
        0,
        1
       ],
       "s"
      ],
      [
       [
        "x",
        4
       ],
       [
        "v",
        0,
        0
       ],
       "s"
      ],
      [
       [
        "x",
        5
       ],
       [
        "v",
        1,
        1
       ],
       "s"
      ],
      [
       [
        "v",
        0,
        2
       ],
       [
        "v",
        1,
        2
       ],
       "d"
      ]
     ],
     "verts": [
      [
       "tri",
       [
        "s",
        "s",
        "d"
       ],
       []
      ],
      [
       "tri",
       [
        "s",
        "s",
        "d"
       ],
       []
      ]
     ]
    },
    {
     "coeff": {
      "den": [
       [
        0,
        1,
        1
       ]
      ],
      "num": [
       [
        0,
        1,
        1
       ]
      ]
     },
     "edges": [
      [
       [
        "x",
        0
       ],
       [
        "v",
        1,
        2
       ],
       "s"
      ],
      [
       [
        "x",
        1
       ],
       [
        "v",
        0,
        1
       ],
       "s"
      ],
      [
       [
        "x",
        2
       ],
       [
        "v",
        0,
        0
       ],
       "s"
      ],
      [
       [
        "x",
        3
       ],
       [
        "v",
        2,
        1
       ],
       "s"
      ],
      [
       [
        "x",
        4
       ],
       [
        "v",
        3,
        0
       ],
       "s"
      ],
      [
       [
        "x",
        5
       ],
       [
        "v",
        3,
        2
       ],
       "s"
      ],
      [
       [
        "v",
        0,
        2
       ],
       [
        "v",
        2,
        2
       ],
       "d"
      ],
      [
       [
        "v",
        1,
        0
       ],
       [
        "v",
        3,
        1
       ],
       "d"
      ],
      [
       [
        "v",
        1,
        1
       ],
       [
        "v",
        2,
        0
       ],
       "s"
      ]
     ],
     "verts": [
      [
       "tri",
       [
        "s",
        "s",
        "d"
       ],
       []
      ],
      [
       "tri",
       [
        "d",
        "s",
        "s"
       ],
       []
      ],
      [
       "tri",
       [
        "s",
        "s",
        "d"
       ],
       []
      ],
      [
       "tri",
       [
        "s",
        "d",
        "s"
       ],
       []
      ]
     ]
    },
    {
     "coeff": {
      "den": [
       [
        0,
        1,
        1
       ]
      ],
      "num": [
       [
        0,
        1,
        1
       ]
      ]
     },
     "edges": [
      [
       [
        "x",
        0
       ],
       [
        "v",
        2,
        0
       ],
       "s"
      ],
      [
       [
        "x",
        1
       ],
       [
        "v",
        0,
        1
       ],
       "s"
      ],
      [
       [
        "x",
        2
       ],
       [
        "v",
        0,
        0
       ],
       "s"
      ],
      [
       [
        "x",
        3
       ],
       [
        "v",
        1,
        1
       ],
       "s"
      ],
      [
       [
        "x",
        4
       ],
       [
        "v",
        1,
        0
       ],
       "s"
      ],
      [
       [
        "x",
        5
       ],
       [
        "v",
        3,
        1
       ],
       "s"
      ],
      [
       [
        "v",
        0,
        2
       ],
       [
        "v",
        2,
        2
       ],
       "d"
      ],
      [
       [
        "v",
        1,
        2
       ],
       [
        "v",
        3,
        2
       ],
       "d"
      ],
      [
       [
        "v",
        2,
        1
       ],
       [
        "v",
        3,
        0
       ],
       "s"
      ]
     ],
     "verts": [
      [
       "tri",
       [
        "s",
        "s",
        "d"
       ],
       []
      ],
      [
       "tri",
       [
        "s",
        "s",
        "d"
       ],
       []
      ],
      [
       "tri",
       [
        "s",
        "s",
        "d"
       ],
       []
      ],
      [
       "tri",
       [
        "s",
        "s",
        "d"
       ],
       []
      ]
     ]
    },
    {
     "coeff": {
      "den": [
       [
        0,
        1,
        1
       ]
      ],
      "num": [
       [
        0,
        1,
        1
       ]
      ]
     },
     "edges": [
      [
       [
        "v",
        0,
        0
       ],
       [
        "v",
        3,
        1
       ],
       "d"
      ],
      [
       [
        "v",
        0,
        1
       ],
       [
        "x",
        1
       ],
       "s"
      ],
      [
       [
        "v",
        0,
        2
       ],
       [
        "x",
        0
       ],
       "s"
      ],
      [
       [
        "x",
        2
       ],
       [
        "v",
        1,
        0
       ],
       "s"
      ],
      [
       [
        "v",
        1,
        1
       ],
       [
        "v",
        2,
        0
       ],
       "d"
      ],
      [
       [
        "v",
        1,
        2
       ],
       [
        "x",
        3
       ],
       "s"
      ],
      [
       [
        "v",
        2,
        1
       ],
       [
        "v",
        3,
        0
       ],
       "s"
      ],
      [
       [
        "v",
        2,
        2
       ],
       [
        "x",
        4
       ],
       "s"
      ],
      [
       [
        "v",
        3,
        2
       ],
       [
        "x",
        5
       ],
       "s"
      ]
     ],
     "verts": [
      [
       "tri",
       [
        "d",
        "s",
        "s"
       ],
       []
      ],
      [
       "tri",
       [
        "s",
        "d",
        "s"
       ],
       []
      ],
      [
       "tri",
       [
        "d",
        "s",
        "s"
       ],
       []
      ],
      [
       "tri",
       [
        "s",
        "d",
        "s"
       ],
       []
      ]
     ]
    }
   ],
   "word": [
    "s",
    "d",
    "s",
    "d",
    "s",
    "d"
   ]
  }
 ],
 "framing": {
  "den": [
   [
    0,
    1,
    1
   ]
  ],
  "num": [
   [
    5,
    -1,
    1
   ]
  ]
 },
 "loop": {
  "d": {
   "den": [
    [
     0,
     1,
     1
    ]
   ],
   "num": [
    [
     -6,
     1,
     1
    ],
    [
     -2,
     1,
     1
    ],
    [
     0,
     1,
     1
    ],
    [
     2,
     1,
     1
    ],
    [
     6,
     1,
     1
    ]
   ]
  },
  "s": {
   "den": [
    [
     0,
     1,
     1
    ]
   ],
   "num": [
    [
     -4,
     -1,
     1
    ],
    [
     -2,
     -1,
     1
    ],
    [
     2,
     -1,
     1
    ],
    [
     4,
     -1,
     1
    ]
   ]
  }
 },
 "meta": {
  "braiding_eigenvalues": "q on (2,0), -1/q on (0,1), -1/q^5 on 1",
  "vertex_gauge": "bent inclusion of the linear-algebra projection (tau iota_bent = beta_ss)"
 },
 "schema": "c2spider/rules/1"
}
