#pragma once

#include "arboretum/error.hpp"
#include "arboretum/trees.hpp"
#include "arboretum/text.hpp"
#include "arboretum/lincomb.hpp"
#include "arboretum/rotation.hpp"
#include "arboretum/enumerate.hpp"
#include "arboretum/hopf.hpp"
#include "arboretum/operad.hpp"
#include "arboretum/format.hpp"
#include "arboretum/dot.hpp"
#include "arboretum/check.hpp"
