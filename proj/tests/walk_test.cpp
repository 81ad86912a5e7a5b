#include <gtest/gtest.h>

#include "wtc/generators.hpp"
#include "wtc/walk.hpp"

using namespace wtc;

TEST(WalkValidator, ClawWalks) {
  Graph g = claw_graph();
  EXPECT_TRUE(is_valid_walk(g, walk_of(g, {"a", "b", "c"}), WalkKind::tolled));
  // Revisiting the gate b is fine for weakly toll walks only.
  auto through_d = walk_of(g, {"a", "b", "d", "b", "c"});
  EXPECT_TRUE(is_valid_walk(g, through_d, WalkKind::weakly_toll));
  EXPECT_FALSE(is_valid_walk(g, through_d, WalkKind::tolled));
}

TEST(WalkValidator, Rejections) {
  Graph g = path_graph(4);
  EXPECT_TRUE(walk_defect(g, walk_of(g, {"v1", "v2"}), WalkKind::weakly_toll));      // too short
  EXPECT_TRUE(walk_defect(g, walk_of(g, {"v1", "v2", "v1"}), WalkKind::weakly_toll));  // same endpoints
  EXPECT_TRUE(walk_defect(g, walk_of(g, {"v1", "v3", "v4"}), WalkKind::weakly_toll));  // not a walk
  Graph c = cycle_graph(5);
  // v2 sees the target v3 but is not the last inner vertex
  EXPECT_TRUE(walk_defect(c, walk_of(c, {"v1", "v2", "v3", "v4", "v3"}), WalkKind::weakly_toll));
  EXPECT_THROW(walk_of(g, {"v1", "zz"}), input_error);
}

TEST(WalkValidator, SourceConstraint) {
  Graph g = bull_graph();  // v1 v2 v3 v4 path, a on v2 and v3
  EXPECT_TRUE(is_valid_walk(g, walk_of(g, {"v1", "v2", "a", "v3", "v4"}), WalkKind::weakly_toll));
  // the gate may repeat
  EXPECT_TRUE(is_valid_walk(g, walk_of(g, {"v1", "v2", "a", "v2", "v3", "v4"}), WalkKind::weakly_toll));
  // a sees v2 and v3; v2 appears but the walk left a through v3
  EXPECT_TRUE(walk_defect(g, walk_of(g, {"a", "v3", "v2", "v1"}), WalkKind::weakly_toll));
  EXPECT_FALSE(walk_defect(g, walk_of(g, {"a", "v2", "v1"}), WalkKind::weakly_toll));
}

TEST(WalkValidator, Fig5LongWalk) {
  // s2 lies on a weakly toll walk between s1 and q1.
  Graph g = fig5_1_graph();
  auto w = walk_of(g, {"s1", "3", "4", "s2", "4", "3", "q1"});
  EXPECT_FALSE(walk_defect(g, w, WalkKind::weakly_toll));
  EXPECT_TRUE(walk_defect(g, w, WalkKind::tolled));
}
