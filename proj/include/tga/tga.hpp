#pragma once

#include "tga/builtin.hpp"
#include "tga/canonical.hpp"
#include "tga/colorset.hpp"
#include "tga/connectivity.hpp"
#include "tga/error.hpp"
#include "tga/expr.hpp"
#include "tga/expr_parse.hpp"
#include "tga/families.hpp"
#include "tga/field_linalg.hpp"
#include "tga/graph.hpp"
#include "tga/graph_io.hpp"
#include "tga/hankel.hpp"
#include "tga/nat_span.hpp"
#include "tga/params.hpp"
#include "tga/presentation.hpp"
#include "tga/quantum.hpp"
#include "tga/rational.hpp"
#include "tga/semiring.hpp"
#include "tga/synth.hpp"
#include "tga/tropical_linalg.hpp"
#include "tga/zdp.hpp"
