// Generated by tablegen. Do not edit by hand.
#include "sigcover/construct.hpp"

namespace sigcover {

const std::vector<TableEntry>& table_entries() {
    static const std::vector<TableEntry> entries = {
        {"R2", Orientation::yx, 0, PsiShape::plain,
         {{Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 2}},
          {Role::tadpole_at_y, {0, 1, 3}},
          {Role::tadpole_at_y, {0, 1, 3}},
          {Role::tadpole_at_y, {0, 2, 3}},
          {Role::tadpole_at_y, {0, 2, 3}},
          {Role::tadpole_at_y, {1, 2, 3}},
          {Role::tadpole_at_y, {1, 2, 3}}}},
        {"R2", Orientation::yx, 1, PsiShape::plain,
         {{Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 2}},
          {Role::positive_path, {0}},
          {Role::negative_path, {1, 3}},
          {Role::tadpole_at_x, {0, 1, 3}},
          {Role::tadpole_at_y, {0, 2, 3}},
          {Role::tadpole_at_y, {0, 2, 3}},
          {Role::tadpole_at_y, {1, 2, 3}},
          {Role::tadpole_at_y, {1, 2, 3}}}},
        {"R2", Orientation::yx, 2, PsiShape::plain,
         {{Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 2}},
          {Role::positive_path, {0}},
          {Role::positive_path, {1, 2}},
          {Role::negative_path, {1, 3}},
          {Role::negative_path, {1, 3}},
          {Role::tadpole_at_x, {0, 1, 3}},
          {Role::tadpole_at_x, {2, 3}},
          {Role::tadpole_at_y, {0, 2, 3}},
          {Role::tadpole_at_y, {0, 2, 3}}}},
        {"R2", Orientation::yx, 3, PsiShape::plain,
         {{Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 2}},
          {Role::positive_path, {0}},
          {Role::positive_path, {0}},
          {Role::positive_path, {0}},
          {Role::negative_path, {1, 3}},
          {Role::negative_path, {1, 3}},
          {Role::negative_path, {1, 3}},
          {Role::tadpole_at_x, {2, 3}},
          {Role::tadpole_at_x, {2, 3}},
          {Role::tadpole_at_x, {2, 3}}}},
        {"R2", Orientation::xy, 2, PsiShape::one_y_avoids_x,
         {{Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 2}},
          {Role::positive_path, {0}},
          {Role::positive_path, {1, 2}},
          {Role::negative_path, {1, 3}},
          {Role::negative_path, {1, 3}},
          {Role::tadpole_at_x, {0, 2, 3}},
          {Role::tadpole_at_x, {0, 2, 3}},
          {Role::tadpole_at_y, {0, 1, 3}},
          {Role::tadpole_at_y, {2, 3}}}},
        {"R3", Orientation::xy, 2, PsiShape::star,
         {{Role::signed_circuit, {0, 1, 2, 3}},
          {Role::signed_circuit, {0, 1, 2, 3}},
          {Role::positive_path, {0}},
          {Role::positive_path, {0}},
          {Role::negative_path, {1, 3, 4}},
          {Role::negative_path, {1, 3, 4}},
          {Role::tadpole_at_x, {0, 2, 3, 4}},
          {Role::tadpole_at_x, {1, 2, 4}},
          {Role::tadpole_at_y, {0, 1, 2, 4}},
          {Role::tadpole_at_y, {2, 3, 4}}}},
        {"R4", Orientation::xy, 2, PsiShape::split_y,
         {{Role::signed_circuit, {0, 3, 5}},
          {Role::signed_circuit, {0, 3, 5}},
          {Role::signed_circuit, {0, 3, 5}},
          {Role::signed_circuit, {1, 2, 5}},
          {Role::signed_circuit, {1, 2, 5}},
          {Role::positive_path, {0}},
          {Role::positive_path, {0}},
          {Role::negative_path, {1, 3, 4}},
          {Role::negative_path, {1, 3, 4}},
          {Role::tadpole_at_x, {1, 2, 4}},
          {Role::tadpole_at_x, {1, 2, 4}},
          {Role::tadpole_at_y, {0, 2, 4, 5}},
          {Role::tadpole_at_y, {2, 3, 4}}}},
        {"R5", Orientation::xy, 2, PsiShape::split_y,
         {{Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {2, 3, 4, 6}},
          {Role::signed_circuit, {2, 3, 4, 6}},
          {Role::positive_path, {0}},
          {Role::positive_path, {0}},
          {Role::negative_path, {1, 3, 5, 6}},
          {Role::negative_path, {1, 3, 5, 6}},
          {Role::tadpole_at_x, {2, 4, 5, 6}},
          {Role::tadpole_at_x, {3, 4, 5}},
          {Role::tadpole_at_y, {0, 3, 4, 5}},
          {Role::tadpole_at_y, {1, 4, 5, 6}}}},
        {"R2+z", Orientation::xy, 2, PsiShape::star,
         {{Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 2, 3, 4, 5}},
          {Role::signed_circuit, {1, 3, 4, 5}},
          {Role::positive_path, {0, 4}},
          {Role::positive_path, {1, 2, 4}},
          {Role::negative_path, {5}},
          {Role::negative_path, {5}},
          {Role::tadpole_at_x, {0, 1, 3}},
          {Role::tadpole_at_x, {2, 3, 4, 5}},
          {Role::tadpole_at_y, {0, 1, 3, 5}},
          {Role::tadpole_at_y, {2, 3, 4}}}},
        {"R4+z", Orientation::xy, 2, PsiShape::star,
         {{Role::signed_circuit, {0, 1, 4, 5, 6, 7}},
          {Role::signed_circuit, {0, 3, 5}},
          {Role::signed_circuit, {1, 2, 5}},
          {Role::signed_circuit, {1, 2, 5}},
          {Role::signed_circuit, {1, 2, 5}},
          {Role::signed_circuit, {2, 3, 4, 5, 6, 7}},
          {Role::positive_path, {0, 6}},
          {Role::positive_path, {0, 6}},
          {Role::negative_path, {7}},
          {Role::negative_path, {7}},
          {Role::tadpole_at_x, {0, 1, 3, 4}},
          {Role::tadpole_at_x, {2, 3, 4, 6, 7}},
          {Role::tadpole_at_y, {0, 1, 3, 4, 7}},
          {Role::tadpole_at_y, {2, 3, 4, 6}}}},
        {"R5+z", Orientation::xy, 2, PsiShape::star,
         {{Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 3, 4, 5, 7, 8}},
          {Role::signed_circuit, {1, 2, 3, 4, 5, 7, 8}},
          {Role::signed_circuit, {2, 3, 4, 6}},
          {Role::signed_circuit, {2, 3, 4, 6}},
          {Role::positive_path, {0, 7}},
          {Role::positive_path, {0, 7}},
          {Role::negative_path, {8}},
          {Role::negative_path, {8}},
          {Role::tadpole_at_x, {0, 1, 3, 5, 6}},
          {Role::tadpole_at_x, {1, 4, 5, 6, 7, 8}},
          {Role::tadpole_at_y, {2, 3, 5, 6, 8}},
          {Role::tadpole_at_y, {1, 4, 5, 6, 7}}}},
        // none: R1 Orientation::xy t=2 clean
        {"R1", Orientation::xy, 0, PsiShape::x_avoids_y,
         {{Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 2}},
          {Role::tadpole_at_y, {0, 1, 3}},
          {Role::tadpole_at_y, {0, 1, 3}},
          {Role::tadpole_at_y, {0, 1, 3}},
          {Role::tadpole_at_y, {2, 3}},
          {Role::tadpole_at_y, {2, 3}},
          {Role::tadpole_at_y, {2, 3}}}},
        // none: R1 Orientation::xy t=1 x_avoids_y
        // none: R1 Orientation::xy t=2 x_avoids_y
        // none: R1 Orientation::xy t=3 x_avoids_y
        // none: R1 Orientation::yx t=2 clean
        {"R1", Orientation::yx, 0, PsiShape::x_avoids_y,
         {{Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 2}},
          {Role::tadpole_at_y, {0, 2, 3}},
          {Role::tadpole_at_y, {0, 2, 3}},
          {Role::tadpole_at_y, {0, 2, 3}},
          {Role::tadpole_at_y, {1, 3}},
          {Role::tadpole_at_y, {1, 3}},
          {Role::tadpole_at_y, {1, 3}}}},
        // none: R1 Orientation::yx t=1 x_avoids_y
        // none: R1 Orientation::yx t=2 x_avoids_y
        // none: R1 Orientation::yx t=3 x_avoids_y
        // none: R2 Orientation::xy t=2 clean
        {"R2", Orientation::xy, 0, PsiShape::x_avoids_y,
         {{Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 2}},
          {Role::tadpole_at_y, {0, 1, 3}},
          {Role::tadpole_at_y, {0, 1, 3}},
          {Role::tadpole_at_y, {0, 1, 3}},
          {Role::tadpole_at_y, {2, 3}},
          {Role::tadpole_at_y, {2, 3}},
          {Role::tadpole_at_y, {2, 3}}}},
        // none: R2 Orientation::xy t=1 x_avoids_y
        // none: R2 Orientation::xy t=2 x_avoids_y
        // none: R2 Orientation::xy t=3 x_avoids_y
        // none: R2 Orientation::yx t=2 clean
        {"R2", Orientation::yx, 0, PsiShape::x_avoids_y,
         {{Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 2}},
          {Role::tadpole_at_y, {0, 1, 3}},
          {Role::tadpole_at_y, {0, 1, 3}},
          {Role::tadpole_at_y, {0, 2, 3}},
          {Role::tadpole_at_y, {0, 2, 3}},
          {Role::tadpole_at_y, {1, 2, 3}},
          {Role::tadpole_at_y, {1, 2, 3}}}},
        {"R2", Orientation::yx, 1, PsiShape::x_avoids_y,
         {{Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 2}},
          {Role::positive_path, {1, 2}},
          {Role::negative_path, {1, 3}},
          {Role::tadpole_at_x, {2, 3}},
          {Role::tadpole_at_y, {0, 1, 3}},
          {Role::tadpole_at_y, {0, 1, 3}},
          {Role::tadpole_at_y, {0, 2, 3}},
          {Role::tadpole_at_y, {0, 2, 3}}}},
        // none: R2 Orientation::yx t=2 x_avoids_y
        {"R2", Orientation::yx, 3, PsiShape::x_avoids_y,
         {{Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 2}},
          {Role::positive_path, {0}},
          {Role::positive_path, {0}},
          {Role::positive_path, {0}},
          {Role::negative_path, {1, 3}},
          {Role::negative_path, {1, 3}},
          {Role::negative_path, {1, 3}},
          {Role::tadpole_at_x, {2, 3}},
          {Role::tadpole_at_x, {2, 3}},
          {Role::tadpole_at_x, {2, 3}}}},
        // none: R3 Orientation::xy t=2 clean
        {"R3", Orientation::xy, 0, PsiShape::x_avoids_y,
         {{Role::signed_circuit, {0, 1, 2, 3}},
          {Role::signed_circuit, {0, 1, 2, 3}},
          {Role::tadpole_at_y, {0, 1, 3, 4}},
          {Role::tadpole_at_y, {0, 1, 3, 4}},
          {Role::tadpole_at_y, {0, 1, 2, 4}},
          {Role::tadpole_at_y, {0, 1, 2, 4}},
          {Role::tadpole_at_y, {2, 3, 4}},
          {Role::tadpole_at_y, {2, 3, 4}}}},
        // none: R3 Orientation::xy t=1 x_avoids_y
        // none: R3 Orientation::xy t=2 x_avoids_y
        // none: R3 Orientation::xy t=3 x_avoids_y
        // none: R3 Orientation::yx t=2 clean
        {"R3", Orientation::yx, 0, PsiShape::x_avoids_y,
         {{Role::signed_circuit, {0, 1, 2, 3}},
          {Role::signed_circuit, {0, 1, 2, 3}},
          {Role::tadpole_at_y, {0, 1, 3, 4}},
          {Role::tadpole_at_y, {0, 1, 3, 4}},
          {Role::tadpole_at_y, {0, 2, 3, 4}},
          {Role::tadpole_at_y, {0, 2, 3, 4}},
          {Role::tadpole_at_y, {1, 2, 4}},
          {Role::tadpole_at_y, {1, 2, 4}}}},
        // none: R3 Orientation::yx t=1 x_avoids_y
        // none: R3 Orientation::yx t=2 x_avoids_y
        // none: R3 Orientation::yx t=3 x_avoids_y
        // none: R4 Orientation::xy t=2 clean
        {"R4", Orientation::xy, 0, PsiShape::x_avoids_y,
         {{Role::signed_circuit, {0, 1, 2, 3}},
          {Role::signed_circuit, {0, 1, 2, 3}},
          {Role::signed_circuit, {0, 3, 5}},
          {Role::signed_circuit, {1, 2, 5}},
          {Role::tadpole_at_y, {0, 1, 4, 5}},
          {Role::tadpole_at_y, {0, 1, 4, 5}},
          {Role::tadpole_at_y, {1, 3, 4, 5}},
          {Role::tadpole_at_y, {0, 2, 4, 5}},
          {Role::tadpole_at_y, {2, 3, 4}},
          {Role::tadpole_at_y, {2, 3, 4}}}},
        {"R4", Orientation::xy, 1, PsiShape::x_avoids_y,
         {{Role::signed_circuit, {0, 1, 2, 3}},
          {Role::signed_circuit, {0, 1, 2, 3}},
          {Role::signed_circuit, {0, 3, 5}},
          {Role::signed_circuit, {1, 2, 5}},
          {Role::positive_path, {0}},
          {Role::negative_path, {1, 3, 4}},
          {Role::tadpole_at_x, {1, 4, 5}},
          {Role::tadpole_at_y, {1, 3, 4, 5}},
          {Role::tadpole_at_y, {0, 2, 4, 5}},
          {Role::tadpole_at_y, {0, 2, 4, 5}},
          {Role::tadpole_at_y, {2, 3, 4}}}},
        {"R4", Orientation::xy, 2, PsiShape::x_avoids_y,
         {{Role::signed_circuit, {0, 3, 5}},
          {Role::signed_circuit, {0, 3, 5}},
          {Role::signed_circuit, {0, 3, 5}},
          {Role::signed_circuit, {1, 2, 5}},
          {Role::signed_circuit, {1, 2, 5}},
          {Role::positive_path, {0}},
          {Role::positive_path, {0}},
          {Role::negative_path, {1, 3, 4}},
          {Role::negative_path, {1, 3, 4}},
          {Role::tadpole_at_x, {1, 2, 4}},
          {Role::tadpole_at_x, {1, 2, 4}},
          {Role::tadpole_at_y, {0, 2, 4, 5}},
          {Role::tadpole_at_y, {2, 3, 4}}}},
        // none: R4 Orientation::xy t=3 x_avoids_y
        // none: R4 Orientation::yx t=2 clean
        {"R4", Orientation::yx, 0, PsiShape::x_avoids_y,
         {{Role::signed_circuit, {0, 1, 2, 3}},
          {Role::signed_circuit, {0, 3, 5}},
          {Role::signed_circuit, {0, 3, 5}},
          {Role::signed_circuit, {0, 3, 5}},
          {Role::signed_circuit, {1, 2, 5}},
          {Role::tadpole_at_y, {0, 1, 3, 4}},
          {Role::tadpole_at_y, {0, 1, 3, 4}},
          {Role::tadpole_at_y, {1, 2, 4}},
          {Role::tadpole_at_y, {1, 2, 4}},
          {Role::tadpole_at_y, {2, 4, 5}},
          {Role::tadpole_at_y, {2, 4, 5}}}},
        // none: R4 Orientation::yx t=1 x_avoids_y
        // none: R4 Orientation::yx t=2 x_avoids_y
        // none: R4 Orientation::yx t=3 x_avoids_y
        // none: R5 Orientation::xy t=2 clean
        {"R5", Orientation::xy, 0, PsiShape::x_avoids_y,
         {{Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 3, 4, 6}},
          {Role::signed_circuit, {2, 3, 4, 6}},
          {Role::tadpole_at_y, {1, 2, 3, 5, 6}},
          {Role::tadpole_at_y, {1, 2, 3, 5, 6}},
          {Role::tadpole_at_y, {0, 2, 4, 5, 6}},
          {Role::tadpole_at_y, {0, 3, 4, 5}},
          {Role::tadpole_at_y, {0, 3, 4, 5}},
          {Role::tadpole_at_y, {1, 4, 5, 6}}}},
        {"R5", Orientation::xy, 1, PsiShape::x_avoids_y,
         {{Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 3, 4, 6}},
          {Role::signed_circuit, {0, 1, 3, 4, 6}},
          {Role::positive_path, {0}},
          {Role::negative_path, {1, 3, 5, 6}},
          {Role::tadpole_at_x, {2, 3, 5, 6}},
          {Role::tadpole_at_y, {0, 2, 4, 5, 6}},
          {Role::tadpole_at_y, {0, 2, 4, 5, 6}},
          {Role::tadpole_at_y, {1, 2, 3, 4, 5}},
          {Role::tadpole_at_y, {1, 2, 3, 4, 5}}}},
        {"R5", Orientation::xy, 2, PsiShape::x_avoids_y,
         {{Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 3, 4, 6}},
          {Role::signed_circuit, {2, 3, 4, 6}},
          {Role::positive_path, {0}},
          {Role::positive_path, {0}},
          {Role::negative_path, {1, 3, 5, 6}},
          {Role::negative_path, {1, 3, 5, 6}},
          {Role::tadpole_at_x, {2, 4, 5, 6}},
          {Role::tadpole_at_x, {2, 4, 5, 6}},
          {Role::tadpole_at_y, {0, 3, 4, 5}},
          {Role::tadpole_at_y, {1, 2, 3, 4, 5}}}},
        // none: R5 Orientation::xy t=3 x_avoids_y
        // none: R5 Orientation::yx t=2 clean
        {"R5", Orientation::yx, 0, PsiShape::x_avoids_y,
         {{Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 2}},
          {Role::signed_circuit, {0, 1, 3, 4, 6}},
          {Role::signed_circuit, {2, 3, 4, 6}},
          {Role::tadpole_at_y, {0, 1, 3, 5, 6}},
          {Role::tadpole_at_y, {0, 1, 3, 5, 6}},
          {Role::tadpole_at_y, {2, 4, 5, 6}},
          {Role::tadpole_at_y, {2, 4, 5, 6}},
          {Role::tadpole_at_y, {3, 4, 5}},
          {Role::tadpole_at_y, {3, 4, 5}}}},
        // none: R5 Orientation::yx t=1 x_avoids_y
        // none: R5 Orientation::yx t=2 x_avoids_y
        // none: R5 Orientation::yx t=3 x_avoids_y
    };
    return entries;
}

}  // namespace sigcover
