#pragma once

// Reference data for the two dimension-5 worked examples (database indices 200
// and 851) and the dimension-5 survey targets used by the acceptance suite.

#include <vector>

namespace fixtures {

// ---- index 200 (negative example) ----

inline const std::vector<std::vector<long>> k200Rays = {
    {-1, 0, 0, 0, 0}, {0, -1, 0, 0, 0}, {0, 0, -1, 0, 0}, {0, 0, 1, 1, 0},
    {0, 0, 0, -1, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, -1}, {1, 1, 0, 0, -2},
};

inline const std::vector<std::vector<long>> k200Pi = {
    {0, 0, 1, 1, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 1, 0},
    {1, 1, 0, 0, 0, 2, 0, 1},
};

// resolution rank vector indexed by cell dimension 0..5
inline const std::vector<long> k200Ranks = {2, 15, 42, 55, 34, 8};

inline const std::vector<std::vector<long>> k200Collection = {
    {0, 0, 0},    {0, -1, -1},  {0, 0, -1},   {-1, 0, 0},   {-1, -1, -1}, {0, -1, -2},  {0, -1, -3},
    {-2, 0, 0},   {-2, -1, -1}, {0, 0, -2},   {-1, 0, -1},  {-1, -1, -2}, {-1, 0, -2},  {-2, -1, -2},
    {-1, -1, -3}, {-2, 0, -1},  {0, -1, -4},  {-2, -1, -3}, {-2, 0, -2},  {-1, -1, -4}, {-2, -1, -4},
};

// ---- index 851 (positive example) ----

inline const std::vector<std::vector<long>> k851Rays = {
    {-1, 0, 0, 0, 0}, {0, -1, 0, 0, 0}, {0, 0, 1, 0, 0},  {0, 0, -1, 0, 0},
    {0, 0, 0, -1, 0}, {0, 0, 0, 1, 1},  {0, 0, 0, 0, -1}, {1, 1, 0, 0, -1},
};

inline const std::vector<std::vector<long>> k851Pi = {
    {0, 0, 1, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 1, 1, 0},
    {1, 1, 0, 0, 1, 1, 0, 1},
};

inline const std::vector<long> k851Ranks = {1, 11, 33, 43, 26, 6};

// printed order (one duplicate entry in the source list removed)
inline const std::vector<std::vector<long>> k851Collection = {
    {-1, -2, -4}, {0, -2, -4}, {-1, -2, -3}, {-1, -1, -3}, {0, -2, -3}, {-1, -2, -2},
    {-1, -1, -2}, {0, -1, -3}, {-1, 0, -2},  {-1, -1, -1}, {-1, 0, -1}, {0, -2, -2},
    {0, -1, -2},  {0, 0, -2},  {-1, 0, 0},   {0, -1, -1},  {0, 0, -1},  {0, 0, 0},
};

// hom0[i][j] = rank Hom^0(E_j, E_i) in the printed order above
inline const std::vector<std::vector<long>> k851Hom0 = {
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {5, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {2, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {6, 3, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {12, 5, 3, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {15, 5, 5, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {6, 2, 0, 3, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {10, 2, 2, 5, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {12, 6, 0, 6, 2, 0, 0, 3, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {22, 12, 6, 0, 5, 3, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {24, 10, 6, 12, 2, 2, 0, 5, 3, 1, 0, 1, 0, 0, 0, 0, 0, 0},
    {30, 10, 10, 15, 2, 2, 2, 5, 5, 1, 0, 1, 1, 0, 0, 0, 0, 0},
    {31, 15, 12, 0, 5, 5, 3, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0},
    {44, 24, 12, 22, 10, 6, 0, 12, 6, 5, 2, 3, 0, 0, 1, 0, 0, 0},
    {62, 30, 24, 31, 10, 10, 6, 15, 12, 5, 2, 5, 3, 2, 1, 1, 0, 0},
    {53, 31, 22, 0, 15, 12, 6, 0, 0, 0, 5, 0, 0, 3, 0, 0, 1, 0},
    {106, 62, 44, 53, 30, 24, 12, 31, 22, 15, 10, 12, 6, 6, 5, 3, 2, 1},
};

// ---- dimension-5 survey targets ----

inline const std::vector<long> kDim5SuccessIndices = {
    0,   476, 477, 478, 479, 480, 481, 482, 483, 484, 485, 486, 487, 488, 489, 490, 491, 492, 493, 494,
    496, 497, 498, 499, 500, 502, 503, 504, 505, 506, 507, 508, 509, 510, 511, 512, 513, 514, 515, 517,
    518, 519, 520, 521, 522, 523, 524, 525, 526, 527, 528, 529, 530, 531, 532, 533, 534, 536, 537, 538,
    539, 540, 541, 542, 543, 544, 545, 546, 547, 551, 552, 553, 554, 555, 556, 559, 561, 562, 563, 564,
    565, 566, 567, 570, 571, 572, 573, 574, 575, 576, 577, 579, 581, 582, 583, 584, 585, 586, 587, 588,
    590, 591, 592, 593, 594, 595, 599, 600, 601, 602, 603, 604, 606, 608, 609, 610, 611, 612, 613, 614,
    615, 617, 620, 621, 623, 624, 625, 626, 628, 629, 630, 631, 632, 633, 634, 637, 638, 639, 642, 643,
    646, 647, 648, 649, 650, 651, 652, 653, 655, 656, 658, 660, 661, 662, 663, 664, 665, 667, 668, 669,
    670, 671, 672, 673, 675, 676, 677, 678, 679, 680, 681, 682, 685, 686, 687, 688, 689, 690, 691, 692,
    693, 694, 695, 697, 698, 699, 700, 702, 703, 705, 706, 709, 710, 712, 713, 714, 715, 716, 717, 718,
    719, 720, 721, 722, 724, 725, 730, 731, 732, 733, 734, 735, 737, 738, 739, 740, 743, 744, 745, 746,
    747, 748, 749, 750, 751, 752, 753, 754, 758, 760, 763, 766, 767, 773, 774, 775, 776, 777, 778, 779,
    780, 781, 782, 784, 785, 788, 789, 791, 792, 794, 795, 796, 797, 799, 800, 801, 802, 805, 809, 810,
    811, 812, 813, 814, 816, 817, 818, 819, 820, 821, 822, 823, 824, 825, 826, 829, 830, 831, 832, 834,
    835, 837, 840, 841, 848, 849, 850, 851, 852, 853, 854, 855, 856, 857, 858, 859, 861, 862, 863, 864,
};

// database sizes and expected counts per dimension
inline const long kDbSize[6] = {0, 1, 5, 18, 124, 866};
inline const long kSuccessCount[6] = {0, 1, 5, 16, 72, 300};
inline const long kUnimodularCount[6] = {0, 1, 5, 16, 96, 554};

}  // namespace fixtures
