"""Generated by scripts/construct_catalog.py --seed 0; do not edit."""

COORDINATES = {'huh_oh_theta_8': {'name': 'huh_oh_theta_8',
                    'vertices': {'v1': [0, 0, 8],
                                 'v2': [0, 0, -8],
                                 'v3': [7, 6, 10],
                                 'v4': [-11, -1, -5],
                                 'b1': [1, 6, -1],
                                 'b2': [0, 4, -5],
                                 'b3': [10, 9, 4]},
                    'edges': [['v1', 'b1', 'v2'],
                              ['v1', 'b2', 'v3'],
                              ['v2', 'v3'],
                              ['v1', 'b3', 'v4'],
                              ['v2', 'v4']]},
 'k4_9stick': {'name': 'k4_9stick',
               'vertices': {'v1': [0, 0, 8],
                            'v2': [0, 0, -8],
                            'v3': [7, 6, 10],
                            'v4': [-11, -1, -5],
                            'b1': [1, 6, -1],
                            'b2': [0, 4, -5],
                            'b3': [10, 9, 4]},
               'edges': [['v1', 'b1', 'v2'],
                         ['v1', 'b2', 'v3'],
                         ['v2', 'v3'],
                         ['v1', 'b3', 'v4'],
                         ['v2', 'v4'],
                         ['v3', 'v4']]},
 'k33_nonmobius_knotless': {'name': 'k33_nonmobius_knotless',
                            'vertices': {'x': [1, 6, -1],
                                         'v3': [7, 6, 10],
                                         'v4': [-11, -1, -5],
                                         'y': ['-13/2', '3/4', '-5/4'],
                                         'v1': [0, 0, 8],
                                         'v2': [0, 0, -8],
                                         'b2': [0, 4, -5],
                                         'b3': [10, 9, 4],
                                         'b4': [-1, -1, -9]},
                            'edges': [['x', 'v1'],
                                      ['x', 'v2'],
                                      ['y', 'v3'],
                                      ['y', 'v4'],
                                      ['x', 'b4', 'y'],
                                      ['v1', 'b2', 'v3'],
                                      ['v2', 'v3'],
                                      ['v1', 'b3', 'v4'],
                                      ['v2', 'v4']]},
 'k5_13stick': {'name': 'k5_13stick',
                'vertices': {'v1': [7, 6, 10],
                             'v2': [-11, -1, -5],
                             'v3': [0, 0, 8],
                             'v4': [0, 0, -8],
                             'v5': [7, -10, -10],
                             'b1': [1, 6, -1],
                             'b2': [0, 4, -5],
                             'b3': [10, 9, 4]},
                'edges': [['v3', 'b1', 'v4'],
                          ['v3', 'b2', 'v1'],
                          ['v4', 'v1'],
                          ['v3', 'b3', 'v2'],
                          ['v4', 'v2'],
                          ['v1', 'v2'],
                          ['v1', 'v5'],
                          ['v2', 'v5'],
                          ['v3', 'v5'],
                          ['v4', 'v5']]},
 'k6_trefoil_sample': {'points': [(-8, -5, -9),
                                  (2, -10, 7),
                                  (-8, -7, 4),
                                  (9, 2, 10),
                                  (1, 0, -3),
                                  (8, 7, 5)],
                       'knotted_hexagon': [0, 3, 4, 2, 1, 5]},
 'k33_mobius_linear': {'points': [(10, -6, -3),
                                  (8, 4, 3),
                                  (6, -10, -4),
                                  (6, -3, -8),
                                  (-7, -7, 0),
                                  (-4, 10, 7)]}}
