#pragma once

#include "hexpath/board.hpp"
#include "hexpath/bounds.hpp"
#include "hexpath/connection.hpp"
#include "hexpath/construct.hpp"
#include "hexpath/pathfile.hpp"
#include "hexpath/render.hpp"
#include "hexpath/search.hpp"
#include "hexpath/unitgrid.hpp"
